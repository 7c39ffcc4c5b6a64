"""Benchmark complexes: the classical contractible non-collapsible
2-complexes, spheres, tori, staircase products, connected sums and
randomization by flip walks."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .complexes import Complex, Simplex
from .validate import FlipDescriptor, bistellar_flip, is_closed_manifold_low_dim

ABALONE_FACETS = [
    (1, 2, 7), (1, 2, 9), (1, 3, 8), (1, 3, 9), (1, 4, 7), (1, 4, 8),
    (1, 4, 9), (2, 3, 7), (2, 3, 15), (2, 9, 15), (3, 7, 8), (3, 9, 14),
    (3, 14, 15), (4, 5, 7), (4, 5, 8), (4, 6, 7), (4, 6, 9), (5, 6, 9),
    (5, 6, 10), (5, 7, 10), (5, 8, 9), (6, 7, 11), (6, 10, 11), (7, 8, 10),
    (7, 8, 11), (8, 9, 12), (8, 9, 13), (8, 10, 12), (8, 11, 13),
    (8, 12, 13), (9, 12, 14), (9, 13, 15), (10, 11, 12), (11, 12, 13),
    (12, 13, 14), (13, 14, 15),
]

BING_HOUSE2_FACETS = [
    (1, 2, 5), (1, 2, 7), (1, 3, 4), (1, 3, 9), (1, 4, 5), (1, 7, 9),
    (2, 3, 6), (2, 3, 8), (2, 5, 6), (2, 7, 8), (3, 4, 6), (3, 4, 13),
    (3, 8, 9), (3, 9, 13), (4, 5, 10), (4, 6, 13), (4, 10, 13),
    (5, 6, 10), (6, 10, 12), (6, 12, 13), (7, 8, 11),
    (7, 8, 15), (7, 9, 13), (7, 9, 14), (7, 10, 11), (7, 10, 13),
    (7, 14, 15), (8, 9, 12), (8, 9, 16), (8, 11, 12), (8, 11, 15),
    (8, 15, 16), (9, 12, 13), (9, 14, 16), (10, 11, 17), (10, 12, 17),
    (11, 12, 18), (11, 15, 18), (11, 17, 18), (12, 17, 19), (12, 18, 19),
    (14, 15, 17), (14, 16, 19), (14, 17, 19), (15, 16, 18), (15, 17, 18),
    (16, 18, 19),
]

# An 8-vertex dunce hat: quotient of a triangulated disk whose boundary
# is glued to the rim circle 1-2-3 three times (the rim edges 12, 13, 23
# each lie in three triangles, every other edge in two). No free faces,
# trivial reduced homology, and exactly two anticollapse candidates, the
# tetrahedra 1245 and 1367.
DUNCE_HAT8_FACETS = [
    (1, 2, 4), (1, 2, 5), (1, 2, 8), (1, 3, 6), (1, 3, 7), (1, 3, 8),
    (1, 4, 5), (1, 6, 7), (2, 3, 4), (2, 3, 5), (2, 3, 6), (2, 6, 7),
    (2, 7, 8), (3, 4, 7), (3, 5, 8), (4, 5, 8), (4, 7, 8),
]

# certificates that make the classical examples collapsible after a few
# anticollapses
ABALONE_CERTIFICATE = [(8, 9, 12, 13), (9, 12, 13, 14), (9, 13, 14, 15)]
BING_HOUSE2_CERTIFICATE = [
    (7, 8, 11, 15), (11, 15, 17, 18), (7, 11, 15, 17),
    (7, 10, 11, 17), (7, 14, 15, 17)]
BING_HOUSE_K_CERTIFICATE = [
    (2, 3, 5, 18), (3, 5, 18, 19), (5, 18, 19, 21),
    (3, 5, 6, 19), (5, 6, 19, 21), (6, 19, 21, 22)]


@dataclass(frozen=True)
class NamedComplex:
    name: str
    complex: Complex
    expected_f: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.expected_f is not None:
            got = self.complex.f_vector()
            if got != self.expected_f:
                raise ValueError(
                    f"{self.name}: f-vector {got} != expected {self.expected_f}")


def abalone() -> Complex:
    """The 15-vertex triangulation of the Abalone, f = (15, 50, 36)."""
    return Complex.from_facets(ABALONE_FACETS)


def bing_house2() -> Complex:
    """Bing's house with two rooms on 19 vertices, f = (19, 65, 47)."""
    return Complex.from_facets(BING_HOUSE2_FACETS)


def dunce_hat8() -> Complex:
    """An 8-vertex dunce hat with f = (8, 24, 17), no free faces, and
    anticollapse candidates exactly on the tetrahedra 1245 and 1367."""
    return Complex.from_facets(DUNCE_HAT8_FACETS)


def bing_house_k(k: int) -> Complex:
    """Bing's house with k rooms, f = (14k+1, 50k, 36k), for k >= 3.

    A ground floor with k triangular holes sits cyclically around a
    central vertex 1, and one room is glued over each consecutive pair of
    regions. For k = 3 the labels reproduce the BH(3) facet tables; room 0
    always carries the upper labels 17..25, so the six-tetrahedra
    certificate applies verbatim for every k.
    """
    if k < 3:
        raise ValueError("bing_house_k needs k >= 3")
    return Complex.from_facets(bing_house_k_facets(k))


def bing_house_k_facets(k: int) -> list[tuple[int, int, int]]:
    a = [0] * k
    b = [0] * k
    c = [0] * k
    d = [0] * k
    e = [0] * k
    a[0], e[0], a[1], b[0], d[0], c[0] = 2, 3, 4, 5, 6, 7
    e[1], a[2 % k], b[1], c[1], d[1] = 8, 9, 10, 12, 11
    e[k - 1], b[k - 1], d[k - 1], c[k - 1] = 13, 14, 15, 16
    rooms = [list(range(17, 26)), list(range(26, 35))]
    room_last = list(range(35, 44))
    nxt = 44
    for j in range(2, k - 1):
        e[j], a[j + 1], b[j], d[j], c[j] = range(nxt, nxt + 5)
        nxt += 5
    middle_rooms = []
    for j in range(2, k - 1):
        middle_rooms.append(list(range(nxt, nxt + 9)))
        nxt += 9
    rooms = rooms + middle_rooms + [room_last]

    facets = []
    for j in range(k):
        facets += [
            (1, a[j], b[j]), (1, a[j], d[j - 1]), (1, b[j], c[j]),
            (1, d[j], c[j]), (a[j], e[j], b[j]), (e[j], b[j], d[j]),
            (e[j], a[(j + 1) % k], d[j]),
        ]
    for j in range(k):
        A, E, B, D, C = a[j], e[j], b[j], d[j], c[j]
        A1, E1, A2 = a[(j + 1) % k], e[(j + 1) % k], a[(j + 2) % k]
        t = rooms[j]
        facets += [
            (1, A, t[0]), (1, A2, t[0]), (A, E, t[1]), (A, B, t[1]),
            (A, t[0], t[1]), (E, A1, t[2]), (E, t[1], t[2]),
            (A1, E1, t[3]), (A1, t[2], t[3]), (B, D, t[4]), (B, C, t[4]),
            (B, t[1], t[4]), (D, C, t[5]), (D, t[4], t[5]),
            (C, t[4], t[6]), (C, t[5], t[6]), (E1, A2, t[7]),
            (E1, t[3], t[7]), (A2, t[0], t[8]), (A2, t[7], t[8]),
            (t[0], t[1], t[4]), (t[0], t[3], t[5]), (t[0], t[3], t[7]),
            (t[0], t[4], t[6]), (t[0], t[5], t[6]), (t[0], t[7], t[8]),
            (t[1], t[2], t[4]), (t[2], t[3], t[5]), (t[2], t[4], t[5]),
        ]
    return [tuple(sorted(f)) for f in facets]


def boundary_of_simplex(n: int) -> Complex:
    """All proper faces of the n-simplex on labels 1..n+1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Complex.from_facets(combinations(range(1, n + 2), n))


def full_simplex(n: int) -> Complex:
    """The solid n-simplex on labels 1..n+1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return Complex.from_facets([range(1, n + 2)])


def path_interval(m: int) -> Complex:
    """A path with m edges on m+1 vertices."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return Complex.from_facets([(i, i + 1) for i in range(1, m + 1)])


def circle(n: int) -> Complex:
    """A triangulated circle with n vertices."""
    if n < 3:
        raise ValueError("a triangulated circle needs >= 3 vertices")
    return Complex.from_facets(
        [(i, i + 1) for i in range(1, n)] + [(1, n)])


def torus7() -> Complex:
    """The standard (neighborly) 7-vertex triangulation of the torus."""
    def m(x):
        return (x - 1) % 7 + 1
    facets = [(i, m(i + 1), m(i + 3)) for i in range(1, 8)]
    facets += [(i, m(i + 2), m(i + 3)) for i in range(1, 8)]
    return Complex.from_facets(facets)


def cross_product(K: Complex, L: Complex) -> Complex:
    """Staircase product triangulation of |K| x |L|.

    For each pair of facets, the prism is triangulated along monotone
    lattice paths with respect to the label order on both factors. Product
    vertices (u, v) are relabelled consecutively in lexicographic order.
    """
    VK, VL = K.vertices(), L.vertices()
    iK = {u: i for i, u in enumerate(VK)}
    iL = {v: i for i, v in enumerate(VL)}
    label = lambda u, v: iK[u] * len(VL) + iL[v] + 1
    facets = []
    for rho in K.facets():
        for tau in L.facets():
            p, q = len(rho) - 1, len(tau) - 1
            for downs in combinations(range(p + q), p):
                i = j = 0
                cell = [label(rho[0], tau[0])]
                for step in range(p + q):
                    if step in downs:
                        i += 1
                    else:
                        j += 1
                    cell.append(label(rho[i], tau[j]))
                facets.append(cell)
    return Complex.from_facets(facets)


def connected_sum(A: Complex, B: Complex) -> Complex:
    """Connected sum of two closed triangulated surfaces.

    The lexicographically smallest facet of each summand is removed and
    the boundary triangles are identified in label order; all other
    vertices of B get fresh labels.
    """
    for S in (A, B):
        if S.dimension() != 2 or not is_closed_manifold_low_dim(S):
            raise ValueError("connected_sum needs closed triangulated surfaces")
    fa = min(A.facets())
    fb = min(B.facets())
    relabel = dict(zip(fb, fa))
    nxt = max(A.vertices()) + 1
    for v in B.vertices():
        if v not in relabel:
            relabel[v] = nxt
            nxt += 1
    facets = [F for F in A.facets() if F != fa]
    facets += [tuple(sorted(relabel[v] for v in F))
               for F in B.facets() if F != fb]
    return Complex.from_facets(facets)


def genus_surface(g: int) -> Complex:
    """Orientable closed surface of genus g >= 1 as iterated connected
    sums of the 7-vertex torus."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    S = torus7()
    for _ in range(g - 1):
        S = connected_sum(S, torus7())
    return S


def admissible_edge_flips(K: Complex) -> list[FlipDescriptor]:
    """All currently admissible diagonal flips of a triangulated surface."""
    flips = []
    for r in K.faces(1):
        up = K.cofaces(r)
        if len(up) != 2:
            continue
        t1, t2 = up
        diag = tuple(sorted((set(t1) | set(t2)) - set(r)))
        if len(diag) == 2 and diag not in K:
            flips.append(FlipDescriptor(r=r, complement=diag))
    return sorted(flips, key=lambda fd: (fd.r, fd.complement))


def random_flip_walk(K: Complex, steps: int,
                     rng: random.Random | None = None) -> Complex:
    """Apply `steps` uniformly random admissible edge flips to a closed
    surface; the homeomorphism type is preserved."""
    if K.dimension() != 2 or not is_closed_manifold_low_dim(K):
        raise ValueError("flip walks need a closed triangulated surface")
    if rng is None:
        rng = random.Random(0)
    work = K.clone()
    for _ in range(steps):
        flips = admissible_edge_flips(work)
        if not flips:
            raise ValueError("no admissible edge flip exists")
        work = bistellar_flip(work, rng.choice(flips))
    return work


GENERATORS = {
    "abalone": lambda: NamedComplex("abalone", abalone(), (15, 50, 36)),
    "bing-house": lambda rooms=2: NamedComplex(
        f"bing-house-{rooms}",
        bing_house2() if rooms == 2 else bing_house_k(rooms),
        (19, 65, 47) if rooms == 2 else (14 * rooms + 1, 50 * rooms, 36 * rooms)),
    "dunce-hat": lambda: NamedComplex("dunce-hat", dunce_hat8(), (8, 24, 17)),
    "torus": lambda: NamedComplex("torus", torus7(), (7, 21, 14)),
    "sphere": lambda n=2: NamedComplex(f"sphere-{n}", boundary_of_simplex(n + 1)),
    "simplex": lambda n=2: NamedComplex(f"simplex-{n}", full_simplex(n)),
    "circle": lambda n=6: NamedComplex(f"circle-{n}", circle(n)),
    "interval": lambda m=10: NamedComplex(f"interval-{m}", path_interval(m)),
    "genus-surface": lambda g=2: NamedComplex(f"genus-{g}", genus_surface(g)),
}
