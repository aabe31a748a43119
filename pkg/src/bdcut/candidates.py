"""Candidate families for the trace of a minimal cut on a vertex set.

Both families are read off the important cuts.  Every minimal (A,B)-cut
``(V1, V2)`` is dominated by the important cut ``MM(V1, B)``, whose source
side contains ``V1`` and whose size is no larger, so any trace of ``V1``
is a subset of the matching trace of some important cut.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, NamedTuple

from .flow import _terminals
from .impcut import important_sides
from .multigraph import GraphError, MultiGraph, neighbors_of_set, vset


class AugmentedGraph(NamedTuple):
    """``base`` plus one extra edge from ``anchor`` to each attached vertex."""

    base: MultiGraph
    anchor: int
    added_edges: tuple

    @classmethod
    def build(cls, g: MultiGraph, b: Iterable[int], attach: Iterable[int]) -> "AugmentedGraph":
        anchor = min(b)
        bset = frozenset(b)
        added = tuple((anchor, u) for u in sorted(set(attach)) if u not in bset)
        return cls(g, anchor, added)

    def graph(self) -> MultiGraph:
        return self.base.with_edges(self.added_edges)


def canonical(family: Iterable[Iterable[int]]) -> list[tuple]:
    """Deduplicate and sort a family of vertex sets (by size, then lexicographically)."""
    return sorted({vset(x) for x in family}, key=lambda x: (len(x), x))


def _subsets(pool, max_size):
    pool = sorted(pool)
    for r in range(min(max_size, len(pool)) + 1):
        yield from combinations(pool, r)


def candidate_family_bounded_trace(g: MultiGraph, a, b, c, k: int, ell: int) -> list[tuple]:
    """Family containing ``C & V1`` for every minimal (A,B)-cut of size <= k
    with ``|C & V1| <= ell``.

    Built from the important (A,B)-cuts of size <= k + ell in the graph
    augmented with an edge from the anchor ``min(B)`` to every vertex of
    ``C \\ B``: each subset of at most ``ell`` attached vertices on the
    source side is a member.  At most ``2**(3*(k+ell))`` members.
    """
    a, b = _terminals(g, a, b)
    c = g.check_set(c)
    if k < 0 or ell < 0:
        raise GraphError("k and ell must be nonnegative")
    aug = AugmentedGraph.build(g, b, c)
    h = aug.graph()
    attached = frozenset(u for _, u in aug.added_edges)
    family = set()
    for side in important_sides(h, a, b, k + ell):
        for x in _subsets(side & attached, ell):
            family.add(x)
    return canonical(family)


def candidate_family_neighbor_trace(g: MultiGraph, a, b, b_prime, k: int) -> list[tuple]:
    """Family containing ``N(B') & V1`` for every minimal (A,B)-cut of size <= k.

    Every subset of ``N(B') & S`` over the important (A,B)-cuts ``(S, T)`` of
    size <= k.  At most ``2**(3*k)`` members.
    """
    a, b = _terminals(g, a, b)
    b_prime = g.check_set(b_prime)
    if not b_prime <= b:
        raise GraphError("b_prime must be a subset of b")
    if k < 0:
        raise GraphError("k must be nonnegative")
    nb = frozenset(neighbors_of_set(g, b_prime))
    family = set()
    for side in important_sides(g, a, b, k):
        pool = side & nb
        family.update(_subsets(pool, len(pool)))
    return canonical(family)


def disjoint_pairs(f1: Iterable[tuple], f2: Iterable[tuple]) -> list[tuple[tuple, tuple]]:
    """All ordered pairs ``(x1, x2)`` from ``f1 x f2`` with ``x1 & x2`` empty."""
    f2 = [(x, frozenset(x)) for x in f2]
    return [(x1, x2) for x1 in f1 for x2, s2 in f2 if s2.isdisjoint(x1)]
