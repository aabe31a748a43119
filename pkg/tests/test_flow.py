import random

import pytest
from hypothesis import given, settings, strategies as st

from bdcut.flow import Cut, min_cut_value, mm_cut
from bdcut.multigraph import GraphError, MultiGraph
from bruteforce import brute_mm
from conftest import cycle, path, random_graph

# a=0, x=1, y=2, t=3
DIAMOND = MultiGraph(4, [(0, 1), (0, 2), (1, 3), (2, 3), (1, 2)])


def test_min_cut_value_examples():
    assert min_cut_value(MultiGraph(2, [(0, 1)] * 2), [0], [1]) == 2
    assert min_cut_value(path(3), [0], [2]) == 1
    assert min_cut_value(cycle(4), [0], [2]) == 2


def test_min_cut_value_limit_stops_early():
    g = MultiGraph(2, [(0, 1)] * 5)
    assert min_cut_value(g, [0], [1], limit=2) == 3


def test_mm_cut_examples():
    assert mm_cut(path(3), [0], [2]) == Cut((0, 1), (2,))
    assert mm_cut(MultiGraph(2, [(0, 1)] * 2), [0], [1]) == Cut((0,), (1,))
    c = mm_cut(DIAMOND, [0], [3])
    assert c == Cut((0, 1, 2), (3,))
    assert c.size(DIAMOND) == 2


def test_diamond_against_brute_force():
    value, tops, _ = brute_mm(DIAMOND, {0}, {3})
    assert value == 2 and tops == [frozenset({0, 1, 2})]


@pytest.mark.parametrize("s,t", [([0], [0, 1]), ([], [1]), ([0], [])])
def test_bad_terminals(s, t):
    with pytest.raises(GraphError):
        mm_cut(path(3), s, t)


def test_against_brute_force_random():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(2, 9)
        g = random_graph(rng, n, rng.randint(0, 16))
        verts = rng.sample(range(n), n)
        ns = rng.randint(1, n - 1)
        nt = rng.randint(1, n - ns)
        s, t = verts[:ns], verts[ns:ns + nt]
        value, tops, mins = brute_mm(g, s, t)
        c = mm_cut(g, s, t)
        assert min_cut_value(g, s, t) == value == c.size(g)
        assert len(tops) == 1 and frozenset(c.v1) == tops[0]
        assert all(x <= tops[0] for x in mins)


@settings(max_examples=60)
@given(st.randoms(use_true_random=False))
def test_value_invariant_under_edge_permutation(r):
    g = random_graph(r, 7, 12)
    shuffled = list(g.edges)
    r.shuffle(shuffled)
    h = MultiGraph(g.n, shuffled)
    assert min_cut_value(g, [0], [6]) == min_cut_value(h, [0], [6])
    assert mm_cut(g, [0], [6]) == mm_cut(h, [0], [6])


def test_mm_cut_sink_side_anchored_when_components_meet_terminals():
    from bdcut.multigraph import anchored

    rng = random.Random(3)
    checked = 0
    for _ in range(300):
        g = random_graph(rng, 8, rng.randint(4, 14))
        s, t = [0, 1], [6, 7]
        if not anchored(g, range(g.n), s + t):
            continue
        c = mm_cut(g, s, t)
        assert anchored(g, c.v2, t)
        checked += 1
    assert checked > 50
