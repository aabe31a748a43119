"""Undirected multigraphs with dense integer vertices.

Vertices are ``0 .. n-1``.  Edges are stored as a list of endpoint pairs, so
parallel edges are separate entries with their own index.  Self-loops are
rejected.  Vertex sets are returned as sorted tuples so that two equal sets
compare equal as sequences.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

VertexSet = tuple


class GraphError(ValueError):
    """Raised on malformed graphs or invalid vertex / set arguments."""


def vset(vertices: Iterable[int]) -> tuple[int, ...]:
    """Canonical form of a vertex set: sorted, no duplicates."""
    return tuple(sorted(set(vertices)))


class MultiGraph:
    """Immutable undirected multigraph.

    ``adj[v]`` lists ``(u, edge_index)`` for every edge entry at ``v``, so a
    neighbour joined by three parallel edges appears three times.
    """

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        self.n = n
        self.edges = tuple((int(u), int(v)) for u, v in edges)
        self.adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(self.edges):
            if u == v:
                raise GraphError(f"edge {i} is a self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {i} = ({u}, {v}) has an endpoint outside [0, {n})")
            self.adj[u].append((v, i))
            self.adj[v].append((u, i))

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self):
        return f"MultiGraph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        return isinstance(other, MultiGraph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} outside [0, {self.n})")

    def check_set(self, x: Iterable[int]) -> frozenset:
        x = frozenset(x)
        for v in x:
            self.check_vertex(v)
        return x

    def with_edges(self, extra: Iterable[Sequence[int]]) -> "MultiGraph":
        """New graph with ``extra`` appended after the existing edges."""
        return MultiGraph(self.n, self.edges + tuple(tuple(e) for e in extra))

    def relabel(self, perm: Sequence[int]) -> "MultiGraph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return MultiGraph(self.n, [(perm[u], perm[v]) for u, v in self.edges])


def degree(g: MultiGraph, v: int) -> int:
    g.check_vertex(v)
    return len(g.adj[v])


def degree_in(g: MultiGraph, v: int, x: Iterable[int]) -> int:
    """Number of edges from ``v`` into ``x \\ {v}``, with multiplicity."""
    g.check_vertex(v)
    x = x if isinstance(x, (set, frozenset)) else frozenset(x)
    return sum(1 for u, _ in g.adj[v] if u in x)


def neighbors_of_set(g: MultiGraph, x: Iterable[int]) -> tuple[int, ...]:
    x = g.check_set(x)
    out = set()
    for v in x:
        for u, _ in g.adj[v]:
            if u not in x:
                out.add(u)
    return vset(out)


def edges_between(g: MultiGraph, x: Iterable[int], y: Iterable[int]) -> int:
    x = g.check_set(x)
    y = g.check_set(y)
    if x & y:
        raise GraphError("edges_between needs disjoint sets")
    if len(y) < len(x):
        x, y = y, x
    return sum(1 for v in x for u, _ in g.adj[v] if u in y)


def cut_size(g: MultiGraph, x: Iterable[int]) -> int:
    """``|E_G(X)|``: edges leaving ``x``."""
    x = x if isinstance(x, (set, frozenset)) else frozenset(x)
    return sum(1 for v in x for u, _ in g.adj[v] if u not in x)


def components(g: MultiGraph, x: Iterable[int] | None = None) -> list[tuple[int, ...]]:
    """Connected components of ``G[x]`` ordered by smallest member."""
    x = frozenset(range(g.n)) if x is None else g.check_set(x)
    seen = set()
    comps = []
    for s in sorted(x):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u, _ in g.adj[v]:
                if u in x and u not in seen:
                    seen.add(u)
                    comp.append(u)
                    queue.append(u)
        comps.append(vset(comp))
    return comps


def anchored(g: MultiGraph, x: Iterable[int], roots: Iterable[int]) -> bool:
    """True when every component of ``G[x]`` contains a vertex of ``roots``.

    Search runs from ``roots`` inside ``x``, so it is one BFS rather than a
    full component decomposition.
    """
    x = x if isinstance(x, (set, frozenset)) else frozenset(x)
    seen = {r for r in roots if r in x}
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for u, _ in g.adj[v]:
            if u in x and u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == len(x)
