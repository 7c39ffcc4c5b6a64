"""Finite abstract simplicial complexes stored as an explicit face lattice.

A simplex is a tuple of strictly increasing positive integer vertex labels.
The complex keeps, for every face, the set of its codimension-1 cofaces, so
free-face queries, collapses and induced-subcomplex extraction are cheap
lookups rather than scans.
"""

from __future__ import annotations

from itertools import chain, combinations
from typing import Iterable, Iterator

Simplex = tuple[int, ...]


def simplex(vertices: Iterable[int]) -> Simplex:
    """Normalize an iterable of vertex labels into a simplex tuple."""
    vs = tuple(sorted(vertices))
    if not vs:
        raise ValueError("a simplex needs at least one vertex")
    if len(set(vs)) != len(vs):
        raise ValueError(f"duplicate vertex labels in {vs}")
    if vs[0] < 1:
        raise ValueError(f"vertex labels must be positive integers, got {vs}")
    return vs


def boundary_facets(s: Simplex) -> Iterator[Simplex]:
    """The codimension-1 faces of a simplex (drop one vertex)."""
    if len(s) == 1:
        return
    for i in range(len(s)):
        yield s[:i] + s[i + 1:]


def subfaces(s: Simplex) -> Iterator[Simplex]:
    """All non-empty subsets of a simplex, including the simplex itself."""
    return chain.from_iterable(
        combinations(s, r) for r in range(1, len(s) + 1))


class Complex:
    """A finite simplicial complex with up-links in its Hasse diagram.

    Mutation methods (collapse, insert_simplex, remove_face) update the
    incidence structure incrementally; a complex is meant to be driven by a
    single writer at a time.
    """

    def __init__(self):
        # face -> set of codim-1 cofaces; down-links are recomputed by
        # dropping a vertex, which is exact and avoids duplicating state
        self._cofaces: dict[Simplex, set[Simplex]] = {}
        self._counts: dict[int, int] = {}

    # -- construction ------------------------------------------------------

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]]) -> "Complex":
        """Downward closure of a list of facets.

        Input facets that are subsets of other input facets are absorbed.
        """
        facet_list = [simplex(f) for f in facets]
        if not facet_list:
            raise ValueError("empty facet list")
        K = cls()
        for f in facet_list:
            K.add_closure(f)
        return K

    def clone(self) -> "Complex":
        K = Complex()
        K._cofaces = {f: set(up) for f, up in self._cofaces.items()}
        K._counts = dict(self._counts)
        return K

    # -- queries -----------------------------------------------------------

    def __contains__(self, face) -> bool:
        return tuple(face) in self._cofaces

    def __len__(self) -> int:
        return len(self._cofaces)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return self._cofaces.keys() == other._cofaces.keys()

    def __repr__(self) -> str:
        return f"Complex(f={self.f_vector()})"

    def faces(self, dim: int | None = None) -> Iterator[Simplex]:
        if dim is None:
            return iter(self._cofaces)
        return (f for f in self._cofaces if len(f) == dim + 1)

    def vertices(self) -> list[int]:
        return sorted(f[0] for f in self._cofaces if len(f) == 1)

    def cofaces(self, face: Simplex) -> set[Simplex]:
        return self._cofaces[tuple(face)]

    def dimension(self) -> int:
        if not self._cofaces:
            raise ValueError("empty complex has no dimension")
        return max(self._counts)

    def f_vector(self) -> tuple[int, ...]:
        if not self._cofaces:
            raise ValueError("empty complex has no f-vector")
        return tuple(self._counts.get(d, 0) for d in range(self.dimension() + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in self._counts.items())

    def facets(self, dim: int | None = None) -> list[Simplex]:
        """Maximal faces, optionally restricted to one dimension."""
        return sorted(f for f, up in self._cofaces.items()
                      if not up and (dim is None or len(f) == dim + 1))

    def is_facet(self, face: Simplex) -> bool:
        return not self._cofaces[tuple(face)]

    def facet_degree(self, face: Simplex) -> int:
        """Number of maximal faces containing the given face."""
        f = tuple(face)
        if f not in self._cofaces:
            raise KeyError(f"{f} is not a face of the complex")
        if not self._cofaces[f]:
            return 1
        seen = set()
        stack = [f]
        count = 0
        while stack:
            g = stack.pop()
            ups = self._cofaces[g]
            if not ups:
                count += 1
                continue
            for h in ups:
                if h not in seen:
                    seen.add(h)
                    stack.append(h)
        return count

    def free_faces(self, banned: frozenset = frozenset()) -> list[tuple[Simplex, Simplex]]:
        """All pairs (tau, sigma) where tau's unique proper coface is sigma.

        Pairs listed in `banned` are excluded; this hook is used by the
        engine right after an expansion to protect the new top simplex.
        """
        out = []
        for f, up in self._cofaces.items():
            if len(up) == 1:
                (cf,) = up
                if (f, cf) not in banned:
                    out.append((f, cf))
        return sorted(out)

    def induced_subcomplex(self, vertex_set: Iterable[int]) -> "Complex":
        """Subcomplex of all faces whose vertices lie in `vertex_set`."""
        V = set(vertex_set)
        if not V:
            raise ValueError("vertex set must be non-empty")
        K = Complex()
        for f in self._cofaces:
            if V.issuperset(f):
                K._add_face(f)
        K._relink()
        return K

    # -- mutation ----------------------------------------------------------

    def _add_face(self, f: Simplex):
        if f not in self._cofaces:
            self._cofaces[f] = set()
            d = len(f) - 1
            self._counts[d] = self._counts.get(d, 0) + 1

    def _relink(self):
        for f in self._cofaces:
            for b in boundary_facets(f):
                self._cofaces[b].add(f)

    def add_closure(self, s: Simplex):
        """Add a simplex together with all of its subfaces."""
        for f in subfaces(s):
            if f not in self._cofaces:
                self._add_face(f)
                for b in boundary_facets(f):
                    self._cofaces[b].add(f)

    def insert_simplex(self, s: Iterable[int]) -> None:
        """Insert a new simplex (and its closure), updating links in place."""
        s = simplex(s)
        if s in self._cofaces:
            raise ValueError(f"simplex {s} is already a face")
        self.add_closure(s)

    def _delete_face(self, f: Simplex):
        d = len(f) - 1
        del self._cofaces[f]
        self._counts[d] -= 1
        if not self._counts[d]:
            del self._counts[d]
        for b in boundary_facets(f):
            self._cofaces[b].discard(f)

    def collapse(self, tau: Iterable[int], sigma: Iterable[int]) -> None:
        """Elementary collapse: remove the free face tau and its coface sigma."""
        tau, sigma = tuple(tau), tuple(sigma)
        if tau not in self._cofaces:
            raise ValueError(f"{tau} is not a face")
        up = self._cofaces[tau]
        if up != {sigma}:
            raise ValueError(
                f"({tau}, {sigma}) is not a free pair: cofaces of {tau} are {sorted(up)}")
        self._delete_face(sigma)
        self._delete_face(tau)

    def remove_face(self, s: Iterable[int]) -> None:
        """Remove a single maximal face."""
        s = tuple(s)
        if s not in self._cofaces:
            raise ValueError(f"{s} is not a face")
        if self._cofaces[s]:
            raise ValueError(f"{s} is not maximal; it cannot be removed alone")
        self._delete_face(s)

    def link(self, face: Iterable[int]) -> list[Simplex]:
        """Faces disjoint from `face` whose union with it is again a face."""
        f = tuple(face)
        fs = set(f)
        out = []
        for g in self._cofaces:
            if fs.isdisjoint(g) and tuple(sorted(fs.union(g))) in self._cofaces:
                out.append(g)
        return sorted(out)

    # -- consistency (used by tests) --------------------------------------

    def check_closure(self) -> bool:
        """Full re-closure check: every subset of a face is a face and the
        up-links mirror containment with |difference| = 1."""
        for f in self._cofaces:
            for b in boundary_facets(f):
                if b not in self._cofaces or f not in self._cofaces[b]:
                    return False
        for f, up in self._cofaces.items():
            for g in up:
                if len(g) != len(f) + 1 or not set(g).issuperset(f):
                    return False
                if g not in self._cofaces:
                    return False
        return True
