import pytest
from hypothesis import given, settings, strategies as st

from bdcut.multigraph import (
    GraphError,
    MultiGraph,
    components,
    cut_size,
    degree,
    degree_in,
    edges_between,
    neighbors_of_set,
)
from conftest import cycle, path


@st.composite
def graphs(draw, max_n=8, max_m=16):
    n = draw(st.integers(1, max_n))
    if n < 2:
        return MultiGraph(n)
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1])
    return MultiGraph(n, draw(st.lists(pairs, max_size=max_m)))


def test_degree_counts_parallel_edges():
    g = MultiGraph(2, [(0, 1)] * 3)
    assert degree(g, 0) == 3


def test_degree_isolated_and_triangle():
    assert degree(MultiGraph(3, [(0, 1)]), 2) == 0
    assert degree(cycle(3), 1) == 2


def test_degree_out_of_range():
    with pytest.raises(GraphError):
        degree(path(3), 3)


def test_degree_in():
    assert degree_in(path(3), 1, {0}) == 1
    assert degree_in(path(3), 1, set()) == 0
    assert degree_in(MultiGraph(2, [(0, 1), (0, 1)]), 0, {0, 1}) == 2


def test_neighbors_of_set():
    assert neighbors_of_set(path(3), [1]) == (0, 2)
    assert neighbors_of_set(path(3), [0, 1, 2]) == ()
    star = MultiGraph(5, [(0, i) for i in range(1, 5)])
    assert neighbors_of_set(star, [1, 2]) == (0,)


def test_edges_between():
    assert edges_between(MultiGraph(2, [(0, 1)] * 2), [0], [1]) == 2
    assert edges_between(MultiGraph(2), [0], [1]) == 0
    assert edges_between(cycle(4), [0, 2], [1, 3]) == 4
    with pytest.raises(GraphError):
        edges_between(cycle(4), [0, 1], [1])


def test_components():
    assert components(path(3), [0, 2]) == [(0,), (2,)]
    assert components(path(3), []) == []
    assert components(cycle(3), [0, 1, 2]) == [(0, 1, 2)]


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 5)], [(-1, 1)]])
def test_construction_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        MultiGraph(3, edges)


@given(graphs())
def test_handshake(g):
    assert sum(degree(g, v) for v in range(g.n)) == 2 * g.m
    for v in range(g.n):
        mult = sum(1 for e in g.edges if v in e)
        assert degree(g, v) == mult


@given(graphs(), st.data())
def test_degree_split(g, data):
    x = set(data.draw(st.sets(st.integers(0, g.n - 1))))
    rest = set(range(g.n)) - x
    for v in range(g.n):
        assert degree_in(g, v, x) + degree_in(g, v, rest - {v}) == degree(g, v)
    assert edges_between(g, x, rest) == sum(degree_in(g, v, rest) for v in x) == cut_size(g, x)


@given(graphs())
def test_components_partition_vertices(g):
    comps = components(g)
    flat = [v for c in comps for v in c]
    assert sorted(flat) == list(range(g.n))
    assert [c[0] for c in comps] == sorted(c[0] for c in comps)
    for c in comps:
        assert neighbors_of_set(g, c) == ()
