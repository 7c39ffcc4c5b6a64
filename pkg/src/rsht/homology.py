"""Integral simplicial homology via Smith normal form.

This is the test oracle for simple-homotopy invariants: collapses,
expansions and subdivisions must all leave the profile computed here
unchanged. The elimination works on exact Python integers, so there is no
overflow, and pivots are chosen greedily by magnitude and fill-in.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .complexes import Complex

HOMOLOGY_FACE_LIMIT = 200_000


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced integral homology: one Betti number and one multiset of
    torsion coefficients per dimension 0..dim."""

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    def normalized(self) -> "HomologyProfile":
        """Drop trailing trivial groups, so profiles of homotopy
        equivalent complexes of different dimensions compare equal."""
        n = len(self.betti)
        while n > 1 and self.betti[n - 1] == 0 and not self.torsion[n - 1]:
            n -= 1
        return HomologyProfile(self.betti[:n], self.torsion[:n])

    def __str__(self):
        parts = []
        for i, (b, t) in enumerate(zip(self.betti, self.torsion)):
            tors = " + ".join(f"Z/{c}" for c in t)
            rank = "" if not b else ("Z" if b == 1 else f"Z^{b}")
            parts.append(f"H_{i} = {' + '.join(p for p in (rank, tors) if p) or '0'}")
        return ", ".join(parts)


def boundary_matrix(K: Complex, i: int) -> list[list[int]]:
    """Dense matrix of the boundary operator from i-faces to (i-1)-faces,
    with the label-order orientation convention."""
    if not 1 <= i <= K.dimension():
        raise ValueError(f"boundary index {i} out of range for dim {K.dimension()}")
    rows = sorted(K.faces(i - 1))
    cols = sorted(K.faces(i))
    row_index = {f: r for r, f in enumerate(rows)}
    M = [[0] * len(cols) for _ in rows]
    for c, f in enumerate(cols):
        for j in range(len(f)):
            b = f[:j] + f[j + 1:]
            M[row_index[b]][c] = (-1) ** j
    return M


def smith_diagonal(entries: dict[tuple[int, int], int]) -> list[int]:
    """Nonzero diagonal of the Smith normal form of a sparse integer matrix.

    `entries` maps (row, col) to a nonzero value. Returns the invariant
    factors (each positive, each dividing the next).
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for (r, c), v in entries.items():
        if v:
            rows.setdefault(r, {})[c] = v
            cols.setdefault(c, set()).add(r)

    def set_entry(r, c, v):
        if v:
            rows.setdefault(r, {})[c] = v
            cols.setdefault(c, set()).add(r)
        else:
            row = rows.get(r)
            if row and c in row:
                del row[c]
                if not row:
                    del rows[r]
                cols[c].discard(r)
                if not cols[c]:
                    del cols[c]

    diag = []
    while rows:
        # pivot: smallest magnitude, then least expected fill-in
        best = None
        for r, row in rows.items():
            rl = len(row)
            for c, v in row.items():
                key = (abs(v), (rl - 1) * (len(cols[c]) - 1))
                if best is None or key < best[0]:
                    best = (key, r, c)
                    if key[0] == 1 and key[1] == 0:
                        break
            else:
                continue
            break
        _, pr, pc = best
        while True:
            pv = rows[pr][pc]
            # clear the pivot column with row operations
            for r in list(cols[pc]):
                if r == pr:
                    continue
                q = rows[r][pc] // pv
                if q:
                    for c, v in list(rows[pr].items()):
                        set_entry(r, c, rows.get(r, {}).get(c, 0) - q * v)
            if len(cols[pc]) > 1:
                # a nonzero remainder smaller than the pivot appeared;
                # it becomes the next pivot value
                pr = min(r for r in cols[pc] if r != pr)
                continue
            # clear the pivot row with column operations
            pv = rows[pr][pc]
            for c in [c for c in rows[pr] if c != pc]:
                q = rows[pr][c] // pv
                if q:
                    for r in list(cols[pc]):
                        set_entry(r, c, rows.get(r, {}).get(c, 0) - q * rows[r][pc])
            if len(rows[pr]) > 1:
                pc = min(c for c in rows[pr] if c != pc)
                continue
            break
        diag.append(abs(rows[pr][pc]))
        set_entry(pr, pc, 0)

    # enforce the divisibility chain pairwise
    changed = True
    while changed:
        changed = False
        diag.sort()
        for i in range(len(diag) - 1):
            a, b = diag[i], diag[i + 1]
            if b % a:
                g = gcd(a, b)
                diag[i], diag[i + 1] = g, a * b // g
                changed = True
    return diag


def _sparse_boundary(K: Complex, i: int, rows: list, cols: list
                     ) -> dict[tuple[int, int], int]:
    row_index = {f: r for r, f in enumerate(rows)}
    entries = {}
    for c, f in enumerate(cols):
        for j in range(len(f)):
            entries[(row_index[f[:j] + f[j + 1:]], c)] = (-1) ** j
    return entries


def homology(K: Complex, limit: int = HOMOLOGY_FACE_LIMIT) -> HomologyProfile:
    """Reduced integral homology of a complex from Smith normal forms."""
    if len(K) > limit:
        raise ValueError(
            f"complex with {len(K)} faces exceeds the homology capacity {limit}")
    dim = K.dimension()
    faces = [sorted(K.faces(i)) for i in range(dim + 1)]
    # ranks[i] = rank of the boundary map from i-faces; index 0 is the
    # augmentation map onto the empty simplex
    ranks = [1]
    torsions: list[list[int]] = [[]]
    for i in range(1, dim + 1):
        d = smith_diagonal(_sparse_boundary(K, i, faces[i - 1], faces[i]))
        ranks.append(len(d))
        torsions.append([v for v in d if v > 1])
    ranks.append(0)
    torsions.append([])
    betti = tuple(len(faces[i]) - ranks[i] - ranks[i + 1] for i in range(dim + 1))
    torsion = tuple(tuple(sorted(torsions[i + 1])) for i in range(dim + 1))
    return HomologyProfile(betti=betti, torsion=torsion)
