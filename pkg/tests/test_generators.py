import random

import pytest

from rsht import (abalone, admissible_edge_flips, bing_house2, bing_house_k,
                  boundary_of_simplex, circle, connected_sum, cross_product,
                  dunce_hat8, full_simplex, genus_surface, homology,
                  is_closed_manifold_low_dim, path_interval, random_flip_walk,
                  torus7)
from rsht.generators import GENERATORS, NamedComplex


CLASSICS = {
    "abalone": (abalone, (15, 50, 36)),
    "bing-house": (bing_house2, (19, 65, 47)),
    "dunce-hat": (dunce_hat8, (8, 24, 17)),
}


@pytest.mark.parametrize("name", sorted(CLASSICS))
def test_classic_f_vectors(name):
    fn, expected = CLASSICS[name]
    assert fn().f_vector() == expected


@pytest.mark.parametrize("name", sorted(CLASSICS))
def test_classics_have_no_free_faces(name):
    fn, _ = CLASSICS[name]
    assert fn().free_faces() == []


@pytest.mark.parametrize("name", sorted(CLASSICS))
def test_classics_are_acyclic(name):
    fn, _ = CLASSICS[name]
    h = homology(fn())
    assert h.betti == (0, 0, 0)
    assert not any(h.torsion)


@pytest.mark.parametrize("k", range(3, 11))
def test_bing_house_k_f_vector_formula(k):
    K = bing_house_k(k)
    assert K.f_vector() == (14 * k + 1, 50 * k, 36 * k)
    assert K.free_faces() == []


def test_bing_house_k_is_acyclic_for_small_k():
    for k in (3, 4):
        h = homology(bing_house_k(k))
        assert h.betti == (0, 0, 0) and not any(h.torsion)


def test_bing_house_k_rejects_small_k():
    with pytest.raises(ValueError):
        bing_house_k(2)


def test_dunce_hat_rim_structure():
    K = dunce_hat8()
    # the rim circle 1-2-3 is glued three times; all other edges twice
    for e in ((1, 2), (1, 3), (2, 3)):
        assert len(K.cofaces(e)) == 3
    others = [e for e in K.faces(1) if e not in ((1, 2), (1, 3), (2, 3))]
    assert all(len(K.cofaces(e)) == 2 for e in others)


def test_simplex_and_boundary():
    assert full_simplex(3).f_vector() == (4, 6, 4, 1)
    S = boundary_of_simplex(3)
    assert S.f_vector() == (4, 6, 4)
    assert is_closed_manifold_low_dim(S)
    assert homology(S).betti == (0, 0, 1)


def test_circle_and_interval():
    assert circle(6).f_vector() == (6, 6)
    assert is_closed_manifold_low_dim(circle(6))
    assert path_interval(10).f_vector() == (11, 10)
    with pytest.raises(ValueError):
        circle(2)
    with pytest.raises(ValueError):
        path_interval(0)


def test_torus7_is_a_neighborly_torus():
    T = torus7()
    assert T.f_vector() == (7, 21, 14)
    assert is_closed_manifold_low_dim(T)
    h = homology(T)
    assert h.betti == (0, 2, 1) and not any(h.torsion)


def test_cross_product_sphere_times_circle():
    P = cross_product(boundary_of_simplex(3), circle(3))
    assert P.f_vector() == (12, 48, 72, 36)
    assert P.euler_characteristic() == 0
    h = homology(P)
    assert h.betti == (0, 1, 1, 1)  # S^2 x S^1


def test_cross_product_euler_multiplicative():
    A, B = full_simplex(2), circle(4)
    P = cross_product(A, B)
    assert P.euler_characteristic() == (
        A.euler_characteristic() * B.euler_characteristic())


def test_cross_product_torus_interval_boundary():
    P = cross_product(torus7(), path_interval(2))
    assert P.dimension() == 3
    # boundary triangles (degree-1 ridges) form two copies of the torus
    boundary = [f for f in P.faces(2) if len(P.cofaces(f)) == 1]
    assert len(boundary) == 2 * 14


def test_genus_surface_and_connected_sum():
    T1 = genus_surface(1)
    assert is_closed_manifold_low_dim(T1)
    assert homology(T1).betti == (0, 2, 1)
    S = connected_sum(torus7(), torus7())
    assert is_closed_manifold_low_dim(S)
    assert homology(S).betti == (0, 4, 1)
    assert S.euler_characteristic() == -2
    G2 = genus_surface(2)
    assert homology(G2).betti == (0, 4, 1)


def test_admissible_edge_flips_on_octahedron(octahedron):
    flips = admissible_edge_flips(octahedron)
    assert len(flips) == 12
    assert {f.r for f in flips} == set(octahedron.faces(1))


def test_random_flip_walk_preserves_the_surface(octahedron):
    S = random_flip_walk(octahedron, 20, random.Random(1))
    assert is_closed_manifold_low_dim(S)
    assert S.euler_characteristic() == 2
    assert homology(S).betti == (0, 0, 1)


def test_generator_registry():
    for name, fn in GENERATORS.items():
        nc = fn()
        assert nc.complex.dimension() >= 1
    assert GENERATORS["bing-house"](rooms=4).complex.f_vector() == (57, 200, 144)


def test_named_complex_validates_expected_f():
    with pytest.raises(ValueError):
        NamedComplex("bad", full_simplex(2), (9, 9, 9))
