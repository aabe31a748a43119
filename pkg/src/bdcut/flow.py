"""Minimum (S,T)-cuts via unit-capacity augmenting paths.

Each edge entry carries one unit of capacity in either direction.  The
source set S and sink set T are contracted virtually: the BFS starts from
every vertex of S at once and stops at the first vertex of T.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, NamedTuple

from .multigraph import GraphError, MultiGraph, cut_size, vset


class Cut(NamedTuple):
    """Ordered bipartition; ``v1`` is the source side."""

    v1: tuple
    v2: tuple

    @classmethod
    def from_side(cls, g: MultiGraph, v1: Iterable[int]) -> "Cut":
        v1 = frozenset(v1)
        return cls(vset(v1), tuple(v for v in range(g.n) if v not in v1))

    def size(self, g: MultiGraph) -> int:
        return cut_size(g, self.v1)


def _terminals(g, s, t):
    s = g.check_set(s)
    t = g.check_set(t)
    if not s or not t:
        raise GraphError("source and sink sets must be nonempty")
    if s & t:
        raise GraphError("source and sink sets overlap")
    return s, t


def _max_flow(g: MultiGraph, s: frozenset, t: frozenset, limit: int | None = None):
    """Return ``(value, flow)``; stops early once ``value > limit``.

    ``flow[i]`` is +1 when edge ``i`` carries a unit from its first endpoint
    to its second, -1 for the opposite direction.
    """
    edges = g.edges
    adj = g.adj
    flow = [0] * len(edges)
    value = 0
    while limit is None or value <= limit:
        parent = {v: None for v in s}
        queue = deque(s)
        hit = None
        while queue and hit is None:
            v = queue.popleft()
            for u, i in adj[v]:
                if u in parent:
                    continue
                f = flow[i] if edges[i][0] == v else -flow[i]
                if f >= 1:
                    continue
                parent[u] = (v, i)
                if u in t:
                    hit = u
                    break
                queue.append(u)
        if hit is None:
            break
        u = hit
        while parent[u] is not None:
            v, i = parent[u]
            flow[i] += 1 if edges[i][0] == v else -1
            u = v
        value += 1
    return value, flow


def _reaching_sink(g, t, flow):
    """Vertices with a residual path into ``t``."""
    edges = g.edges
    adj = g.adj
    seen = set(t)
    queue = deque(t)
    while queue:
        w = queue.popleft()
        for v, i in adj[w]:
            if v in seen:
                continue
            # residual capacity v -> w
            f = flow[i] if edges[i][0] == v else -flow[i]
            if f < 1:
                seen.add(v)
                queue.append(v)
    return seen


def _reachable_from_source(g, s, flow):
    edges = g.edges
    adj = g.adj
    seen = set(s)
    queue = deque(s)
    while queue:
        v = queue.popleft()
        for u, i in adj[v]:
            if u in seen:
                continue
            f = flow[i] if edges[i][0] == v else -flow[i]
            if f < 1:
                seen.add(u)
                queue.append(u)
    return seen


def min_cut_value(g: MultiGraph, s: Iterable[int], t: Iterable[int], limit: int | None = None) -> int:
    """Size of a minimum (S,T)-cut.

    With ``limit`` set the search stops as soon as the value is known to
    exceed it, and ``limit + 1`` is returned in that case.
    """
    s, t = _terminals(g, s, t)
    return _max_flow(g, s, t, limit)[0]


def mm_side(g: MultiGraph, s: frozenset, t: frozenset, limit: int | None = None):
    """Source side of the MM cut as a set, plus the cut value.

    Returns ``(value, None)`` when the value exceeds ``limit``.  No argument
    validation; callers pass checked frozensets.
    """
    value, flow = _max_flow(g, s, t, limit)
    if limit is not None and value > limit:
        return value, None
    v2 = _reaching_sink(g, t, flow)
    return value, frozenset(v for v in range(g.n) if v not in v2)


def mm_cut(g: MultiGraph, s: Iterable[int], t: Iterable[int]) -> Cut:
    """The minimum (S,T)-cut whose source side is largest (it is unique)."""
    s, t = _terminals(g, s, t)
    _, side = mm_side(g, s, t)
    return Cut.from_side(g, side)


def min_side(g: MultiGraph, s: frozenset, t: frozenset, limit: int | None = None):
    """Like :func:`mm_side` but for the minimum cut with the smallest source side."""
    value, flow = _max_flow(g, s, t, limit)
    if limit is not None and value > limit:
        return value, None
    return value, frozenset(_reachable_from_source(g, s, flow))
