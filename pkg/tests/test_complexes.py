import pytest
from hypothesis import given, strategies as st

from rsht import Complex, simplex
from rsht.complexes import boundary_facets, subfaces


def test_simplex_normalizes_and_rejects_duplicates():
    assert simplex([3, 1, 2]) == (1, 2, 3)
    with pytest.raises(ValueError):
        simplex([1, 1, 2])


def test_single_triangle_closure():
    K = Complex.from_facets([(1, 2, 3)])
    assert K.f_vector() == (3, 3, 1)
    assert (1, 2) in K and (1, 2, 3) in K and (1, 4) not in K
    assert K.dimension() == 2
    assert K.euler_characteristic() == 1


def test_faces_and_facets():
    K = Complex.from_facets([(1, 2, 3), (3, 4)])
    assert sorted(K.facets()) == [(1, 2, 3), (3, 4)]
    assert sorted(K.faces(0)) == [(1,), (2,), (3,), (4,)]
    assert K.is_facet((3, 4))
    assert not K.is_facet((1, 2))
    assert K.vertices() == [1, 2, 3, 4]


def test_cofaces_are_codimension_one():
    K = Complex.from_facets([(1, 2, 3), (1, 2, 4)])
    assert K.cofaces((1, 2)) == {(1, 2, 3), (1, 2, 4)}
    assert K.cofaces((1,)) == {(1, 2), (1, 3), (1, 4)}


def test_free_faces_of_triangle():
    K = Complex.from_facets([(1, 2, 3)])
    assert sorted(K.free_faces()) == [
        ((1, 2), (1, 2, 3)), ((1, 3), (1, 2, 3)), ((2, 3), (1, 2, 3))]


def test_free_faces_of_punctured_sphere():
    # boundary of the tetrahedron minus the facet (2,3,4): exactly the
    # three edges of the removed facet become free
    K = Complex.from_facets([(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])
    K.remove_face((2, 3, 4))
    free = sorted(tau for tau, _ in K.free_faces())
    assert free == [(2, 3), (2, 4), (3, 4)]


def test_collapse_removes_only_the_pair():
    K = Complex.from_facets([(1, 2, 3)])
    K.collapse((1, 2), (1, 2, 3))
    assert sorted(K.facets()) == [(1, 3), (2, 3)]
    with pytest.raises(ValueError):
        K.collapse((1, 3), (1, 2, 3))


def test_collapse_requires_free_pair():
    K = Complex.from_facets([(1, 2, 3), (1, 2, 4)])
    with pytest.raises(ValueError):
        K.collapse((1, 2), (1, 2, 3))


def test_insert_simplex_adds_closure():
    K = Complex.from_facets([(1, 2, 3)])
    K.insert_simplex((1, 2, 3, 4))
    assert K.f_vector() == (4, 6, 4, 1)
    with pytest.raises(ValueError):
        K.insert_simplex((1, 2, 3, 4))


def test_remove_face_requires_maximal():
    K = Complex.from_facets([(1, 2, 3)])
    with pytest.raises(ValueError):
        K.remove_face((1, 2))
    K.remove_face((1, 2, 3))
    assert K.dimension() == 1


def test_induced_subcomplex():
    K = Complex.from_facets([(1, 2, 3), (2, 3, 4), (4, 5)])
    sub = K.induced_subcomplex({2, 3, 4})
    assert sorted(sub.facets()) == [(2, 3, 4)]
    assert (4, 5) not in sub


def test_link_of_vertex():
    K = Complex.from_facets([(1, 2, 3), (1, 3, 4)])
    assert sorted(K.link((1,))) == [(2,), (2, 3), (3,), (3, 4), (4,)]


def test_clone_is_independent():
    K = Complex.from_facets([(1, 2, 3)])
    L = K.clone()
    assert K == L
    L.collapse((1, 2), (1, 2, 3))
    assert K != L
    assert K.f_vector() == (3, 3, 1)


def test_boundary_and_subfaces_helpers():
    assert sorted(boundary_facets((1, 2, 3))) == [(1, 2), (1, 3), (2, 3)]
    assert ((1,) in set(subfaces((1, 2)))) and ((1, 2) in set(subfaces((1, 2))))


@given(st.lists(st.frozensets(st.integers(1, 7), min_size=1, max_size=4),
                min_size=1, max_size=8))
def test_closure_is_downward_closed(facet_sets):
    K = Complex.from_facets([tuple(sorted(f)) for f in facet_sets])
    assert K.check_closure()
    assert sum(K.f_vector()) == len(K)
    for f in K.faces():
        for g in subfaces(f):
            assert g in K


@given(st.lists(st.frozensets(st.integers(1, 6), min_size=2, max_size=4),
                min_size=1, max_size=6))
def test_facet_degree_counts_maximal_cofaces(facet_sets):
    K = Complex.from_facets([tuple(sorted(f)) for f in facet_sets])
    facets = set(K.facets())
    for f in K.faces():
        expected = sum(1 for F in facets if set(f) <= set(F))
        assert K.facet_degree(f) == expected
