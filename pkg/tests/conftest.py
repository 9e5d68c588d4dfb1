import pytest

from pseudovis import random_simple_polygon, validate_polygon
from support import complete_graph, cycle_graph

DENT5_VERTICES = ((0, 0), (6, 0), (3, 2), (6, 6), (0, 6))
DENT5_CHORDS = ((0, 2), (0, 3), (2, 4))
BLOCKED_QUAD_VERTICES = ((0, 0), (4, 0), (4, 4), (2, 1))


@pytest.fixture
def quad4():
    """Four-cycle plus the {1,3} chord; (0,2) is its only unordered invisible pair."""
    return cycle_graph(4, [(1, 3)])


@pytest.fixture
def dent5_poly():
    """Square with a dent poked into its right side at vertex 2."""
    return validate_polygon(DENT5_VERTICES)


@pytest.fixture
def dent5_graph():
    return cycle_graph(5, DENT5_CHORDS)


@pytest.fixture
def blocked_quad():
    """Quadrilateral whose dent vertex 3 blocks the (0,2) diagonal."""
    return validate_polygon(BLOCKED_QUAD_VERTICES)


@pytest.fixture
def unit_square():
    return validate_polygon([(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def k5():
    return complete_graph(5)


@pytest.fixture(params=[4, 5, 6])
def chordless_cycle(request):
    return cycle_graph(request.param)


@pytest.fixture(scope="session")
def sample_polygons():
    """Small deterministic corpus for module-level property tests."""
    polys = []
    for idx in range(36):
        n = 5 + idx % 6
        polys.append(random_simple_polygon(n, 300 + idx))
    polys.append(validate_polygon(DENT5_VERTICES))
    polys.append(validate_polygon(BLOCKED_QUAD_VERTICES))
    return polys
