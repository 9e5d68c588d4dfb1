import json

import pytest
from hypothesis import given, strategies as st

from pseudovis import (
    IndexOutOfRange,
    MissingCycleEdge,
    SelfLoop,
    graph_from_json,
    graph_to_json,
    interval_edges,
    interval_vertices,
    invisible_pairs,
    validate_graph,
    visibility_graph,
)
from support import complete_graph, cycle_graph


def test_interval_basic():
    assert interval_vertices(5, 1, 3) == [1, 2, 3]
    assert interval_edges(5, 1, 3) == [1, 2]


def test_interval_wraparound():
    assert interval_vertices(5, 3, 1) == [3, 4, 0, 1]
    assert interval_edges(5, 3, 1) == [3, 4, 0]


def test_interval_degenerate():
    assert interval_vertices(5, 2, 2) == [2]
    assert interval_edges(5, 2, 2) == []


def test_validate_complete_graph():
    g = complete_graph(5)
    assert invisible_pairs(g) == []


def test_validate_quad4(quad4):
    assert quad4.visible(1, 3)
    assert not quad4.visible(0, 2)


def test_missing_cycle_edge():
    with pytest.raises(MissingCycleEdge):
        validate_graph(4, [[0, 1], [1, 2], [3, 0]])


def test_self_loop():
    with pytest.raises(SelfLoop):
        validate_graph(4, [[0, 1], [1, 2], [2, 3], [3, 0], [2, 2]])


def test_index_out_of_range():
    with pytest.raises(IndexOutOfRange):
        validate_graph(4, [[0, 1], [1, 2], [2, 3], [3, 4]])
    with pytest.raises(IndexOutOfRange):
        validate_graph(2, [[0, 1]])


def test_duplicates_ignored():
    g = validate_graph(3, [[0, 1], [1, 0], [1, 2], [2, 0], [0, 2]])
    assert len(g.edges) == 3


def test_invisible_pairs_quad4(quad4):
    assert invisible_pairs(quad4) == [(0, 2), (2, 0)]


def test_invisible_pairs_dent5(dent5_poly, dent5_graph):
    # the graph fixture is exactly what the geometric oracle derives
    assert visibility_graph(dent5_poly) == dent5_graph
    assert invisible_pairs(dent5_graph) == [(1, 3), (1, 4), (3, 1), (4, 1)]


@given(st.integers(3, 12), st.data())
def test_interval_partitions(n, data):
    i = data.draw(st.integers(0, n - 1))
    j = data.draw(st.integers(0, n - 1))
    if i != j:
        edges = interval_edges(n, i, j) + interval_edges(n, j, i)
        assert sorted(edges) == list(range(n))
        if (j + 1) % n != i:
            verts = interval_vertices(n, i, j) + interval_vertices(
                n, (j + 1) % n, (i - 1) % n
            )
            assert sorted(verts) == list(range(n))


@st.composite
def graphs(draw):
    n = draw(st.integers(4, 8))
    chords = [
        (i, j)
        for i in range(n)
        for j in range(i + 2, n)
        if not (i == 0 and j == n - 1)
    ]
    picked = draw(st.frozensets(st.sampled_from(chords)))
    return cycle_graph(n, picked)


@given(graphs())
def test_invisible_pairs_symmetric(g):
    pairs = invisible_pairs(g)
    assert len(pairs) % 2 == 0
    as_set = set(pairs)
    for i, j in pairs:
        assert (j, i) in as_set
        assert not g.visible(i, j)


def test_json_round_trip(dent5_graph):
    text = graph_to_json(dent5_graph)
    assert graph_from_json(text) == dent5_graph
    obj = json.loads(text)
    assert obj["edges"] == sorted(obj["edges"])
    assert all(i < j for i, j in obj["edges"])
