import pytest

from rsht import Complex


def make_octahedron() -> Complex:
    """The boundary of the octahedron: antipodal pairs (1,2), (3,4), (5,6)."""
    return Complex.from_facets(
        [(a, b, c) for a in (1, 2) for b in (3, 4) for c in (5, 6)])


@pytest.fixture
def octahedron() -> Complex:
    return make_octahedron()
