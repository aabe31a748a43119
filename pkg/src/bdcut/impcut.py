"""Important (S,T)-cuts.

A minimal (S,T)-cut ``(X, V \\ X)`` is important when no (S,T)-cut with a
strictly larger source side has cut-size at most ``|E(X)|``.  There are at
most ``4**k`` of size at most ``k``.
"""

from __future__ import annotations

from typing import Iterable

from .flow import Cut, _terminals, mm_side
from .multigraph import GraphError, MultiGraph, anchored, cut_size


def is_important_cut(g: MultiGraph, c: Cut, s: Iterable[int], t: Iterable[int]) -> bool:
    """Test importance of ``c`` for terminals ``(s, t)``.

    ``c`` is important iff it is minimal and the MM ``(c.v1, t)``-cut is
    ``c`` itself.
    """
    s, t = _terminals(g, s, t)
    v1 = g.check_set(c.v1)
    v2 = g.check_set(c.v2)
    if v1 & v2 or len(v1) + len(v2) != g.n or not s <= v1 or not t <= v2:
        raise GraphError("not an (S,T)-cut")
    return _important_side(g, v1, s, t)


def _important_side(g, v1, s, t):
    if not anchored(g, v1, s):
        return False
    v2 = frozenset(range(g.n)) - v1
    if not anchored(g, v2, t):
        return False
    _, side = mm_side(g, v1, t)
    return side == v1


def _without_edge(h: MultiGraph, ids: tuple, i: int):
    edges = h.edges[:i] + h.edges[i + 1:]
    return MultiGraph(h.n, edges), ids[:i] + ids[i + 1:]


def important_sides(g: MultiGraph, s: frozenset, t: frozenset, k: int) -> list[frozenset]:
    """Source sides of all important (S,T)-cuts of size <= k, unsorted.

    Branching: take the MM cut of the current graph; if it has positive
    size, choose its crossing edge with the lowest original index and either
    absorb the far endpoint into the source set (the min-cut value must then
    rise) or delete that edge and spend one unit of budget.  A zero-size
    leaf proposes its MM source side; every proposal is re-checked against
    ``g`` so over-generation is harmless.
    """
    if k < 0:
        return []
    proposals = set()

    def branch(h, ids, src, budget):
        value, side = mm_side(h, src, t, limit=budget)
        if side is None:
            return
        if value == 0:
            proposals.add(side)
            return
        best = None
        for v in side:
            for u, i in h.adj[v]:
                if u not in side and (best is None or ids[i] < best[0]):
                    best = (ids[i], i, u)
        _, i, u = best
        if u not in t:
            branch(h, ids, side | {u}, budget)
        h2, ids2 = _without_edge(h, ids, i)
        branch(h2, ids2, side, budget - 1)

    branch(g, tuple(range(g.m)), s, k)
    return [x for x in proposals if cut_size(g, x) <= k and _important_side(g, x, s, t)]


def enumerate_important_cuts(g: MultiGraph, s: Iterable[int], t: Iterable[int], k: int) -> list[Cut]:
    """All important (S,T)-cuts of size at most ``k``.

    Sorted by source-side size, then lexicographically, so the output is
    deterministic.

    >>> g = MultiGraph(3, [(0, 1), (1, 2)])
    >>> [c.v1 for c in enumerate_important_cuts(g, [0], [2], 2)]
    [(0, 1)]
    """
    s, t = _terminals(g, s, t)
    sides = important_sides(g, s, t, k)
    cuts = [Cut.from_side(g, x) for x in sides]
    cuts.sort(key=lambda c: (len(c.v1), c.v1))
    return cuts
