"""Independent validators: low-dimensional manifold checks, bistellar
flips, the expansion-equals-flip harness, and a random collapsibility
search."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .complexes import Complex, Simplex
from .engine import BallDescriptor, collapse_until_stuck, pure_expansion_step


@dataclass(frozen=True)
class FlipDescriptor:
    """A bistellar flip: replace the star r * boundary(complement) by
    boundary(r) * complement."""

    r: Simplex
    complement: Simplex

    @property
    def star_facets(self) -> list[Simplex]:
        r, c = self.r, self.complement
        if len(c) == 1:
            return [r]
        return sorted(tuple(sorted(set(r) | (set(c) - {v}))) for v in c)

    @property
    def replacement_facets(self) -> list[Simplex]:
        r, c = self.r, self.complement
        if len(r) == 1:
            return [c]
        return sorted(tuple(sorted((set(r) - {w}) | set(c))) for w in r)


def bistellar_flip(K: Complex, fd: FlipDescriptor) -> Complex:
    """Apply a bistellar flip, returning a new complex.

    Admissible iff the maximal faces containing fd.r are exactly the star
    facets of the descriptor and the complement is not yet a face.
    """
    r = tuple(fd.r)
    if r not in K:
        raise ValueError(f"{r} is not a face")
    if tuple(fd.complement) in K:
        raise ValueError(f"complement {fd.complement} is already present")
    rs = set(r)
    star = sorted(F for F in K.facets() if rs.issubset(F))
    if star != fd.star_facets:
        raise ValueError(
            f"star of {r} is {star}, expected {fd.star_facets}")
    keep = [F for F in K.facets() if not rs.issubset(F)]
    return Complex.from_facets(keep + fd.replacement_facets)


def flip_from_ball(ball: BallDescriptor) -> FlipDescriptor:
    """The flip induced by a pure expansion candidate on a manifold."""
    opposite = tuple(v for v in ball.sigma if v not in ball.base)
    return FlipDescriptor(r=ball.base, complement=opposite)


def verify_expansion_equals_flip(K: Complex, ball: BallDescriptor,
                                 seed: int = 0) -> bool:
    """Check that (E)+(CC) followed by collapses equals the bistellar flip.

    The input must be a closed manifold without free faces; for dimension
    <= 3 this is verified, above that it is the caller's responsibility.
    """
    d = K.dimension()
    if K.free_faces():
        raise ValueError("input complex has free faces")
    if d <= 3 and not is_closed_manifold_low_dim(K):
        raise ValueError("input complex is not a closed manifold")
    if d > 6:
        raise ValueError("flip reduction is only guaranteed for dimension <= 6")
    rng = random.Random(seed)
    moved = K.clone()
    pure_expansion_step(moved, ball, rng)
    collapse_until_stuck(moved, rng)
    flipped = bistellar_flip(K, flip_from_ball(ball))
    return moved == flipped


def is_closed_manifold_low_dim(K: Complex) -> bool:
    """Closed-manifold test for dimension <= 3 via ridge degrees and links."""
    d = K.dimension()
    if d > 3:
        raise ValueError(f"manifold check is unsupported for dimension {d}")
    if d == 0:
        return False
    # pure: every face lies under a top-dimensional one
    if any(len(F) != d + 1 for F in K.facets()):
        return False
    if d == 1:
        return all(len(K.cofaces((v,))) == 2 for v in K.vertices())
    if any(len(K.cofaces(rdg)) != 2 for rdg in K.faces(d - 1)):
        return False
    if d == 2:
        return all(_is_single_cycle(K.link((v,))) for v in K.vertices())
    # d == 3: vertex links must be closed connected surfaces with chi = 2
    for v in K.vertices():
        link = Complex.from_facets(K.link((v,)))
        if link.dimension() != 2 or not is_closed_manifold_low_dim(link):
            return False
        if link.euler_characteristic() != 2 or not _is_connected(link):
            return False
    return True


def _is_single_cycle(faces: list[Simplex]) -> bool:
    edges = [f for f in faces if len(f) == 2]
    verts = {f[0] for f in faces if len(f) == 1}
    if not edges or any(len(f) > 2 for f in faces):
        return False
    deg: dict[int, int] = {}
    for a, b in edges:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    if set(deg) != verts or any(n != 2 for n in deg.values()):
        return False
    # connected single cycle: walk from one vertex
    adj: dict[int, list[int]] = {v: [] for v in verts}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {edges[0][0]}
    stack = [edges[0][0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == verts


def _is_connected(K: Complex) -> bool:
    verts = K.vertices()
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        v = stack.pop()
        for e in K.cofaces((v,)):
            w = e[0] if e[1] == v else e[1]
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(verts)


def collapsibility_search(K: Complex, tries: int,
                          rng: random.Random | None = None
                          ) -> list[tuple] | None:
    """Random search for a full collapsing sequence down to one vertex.

    Returns the first successful trace of (tau, sigma) pairs, or None if
    all tries got stuck (collapsibility is then not refuted).
    """
    if tries < 1:
        raise ValueError("tries must be >= 1")
    if rng is None:
        rng = random.Random(0)
    for _ in range(tries):
        work = K.clone()
        trace: list[tuple] = []
        collapse_until_stuck(work, rng, trace=trace)
        if work.f_vector() == (1,):
            return [(t[1], t[2]) for t in trace]
    return None
