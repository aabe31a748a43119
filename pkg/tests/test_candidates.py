import random

import pytest

from bdcut.candidates import (
    AugmentedGraph,
    candidate_family_bounded_trace,
    candidate_family_neighbor_trace,
    disjoint_pairs,
)
from bdcut.multigraph import GraphError, MultiGraph, neighbors_of_set
from bruteforce import minimal_cuts
from conftest import path, random_graph


def test_ell_zero_gives_only_empty_set():
    assert candidate_family_bounded_trace(path(3), [0], [2], [1], 1, 0) == [()]


def test_cut_above_budget_gives_empty_family():
    g = MultiGraph(2, [(0, 1)] * 3)
    assert candidate_family_bounded_trace(g, [0], [1], [0], 1, 1) == []
    assert candidate_family_neighbor_trace(g, [0], [1], [1], 2) == []


def test_path_bounded_trace():
    fam = candidate_family_bounded_trace(path(3), [0], [2], [1], 1, 1)
    assert () in fam and (1,) in fam


def test_neighbor_trace_inside_b():
    # N(B') = {2} lies in B
    g = MultiGraph(4, [(0, 1), (1, 2), (2, 3)])
    assert candidate_family_neighbor_trace(g, [0], [2, 3], [3], 2) == [()]


def test_path_neighbor_trace():
    fam = candidate_family_neighbor_trace(path(3), [0], [2], [2], 1)
    assert () in fam and (1,) in fam


def test_neighbor_trace_requires_subset():
    with pytest.raises(GraphError):
        candidate_family_neighbor_trace(path(3), [0], [2], [1], 1)


def test_overlapping_terminals_rejected():
    with pytest.raises(GraphError):
        candidate_family_bounded_trace(path(3), [0, 1], [1, 2], [1], 1, 1)


def test_augmented_graph_skips_b_vertices():
    aug = AugmentedGraph.build(path(4), [2, 3], [0, 1, 3])
    assert aug.anchor == 2
    assert aug.added_edges == ((2, 0), (2, 1))
    assert aug.graph().edges[:3] == path(4).edges


def test_disjoint_pairs():
    assert disjoint_pairs([()], [()]) == [((), ())]
    assert disjoint_pairs([(1,)], [(1,)]) == []
    assert disjoint_pairs([(), (1,)], [(2,)]) == [((), (2,)), ((1,), (2,))]


def _case(rng):
    n = rng.randint(3, 9)
    g = random_graph(rng, n, rng.randint(1, 14))
    verts = rng.sample(range(n), n)
    na = rng.randint(1, 2)
    nb = rng.randint(1, min(2, n - na))
    return g, verts[:na], verts[na:na + nb]


def test_completeness_random():
    rng = random.Random(5)
    for _ in range(250):
        g, a, b = _case(rng)
        k, ell = rng.randint(0, 3), rng.randint(0, 3)
        c = [v for v in range(g.n) if rng.random() < 0.5]
        b_prime = [v for v in b if rng.random() < 0.7]
        fam_x = set(candidate_family_bounded_trace(g, a, b, c, k, ell))
        fam_y = set(candidate_family_neighbor_trace(g, a, b, b_prime, k))
        nb = set(neighbors_of_set(g, b_prime))
        assert all(set(x) <= set(c) and len(x) <= ell for x in fam_x)
        assert all(set(y) <= nb for y in fam_y)
        assert len(fam_x) <= 2 ** (3 * (k + ell)) and len(fam_y) <= 2 ** (3 * k)
        for v1 in minimal_cuts(g, a, b, k):
            trace = tuple(sorted(v1 & set(c)))
            if len(trace) <= ell:
                assert trace in fam_x
            assert tuple(sorted(v1 & nb)) in fam_y
