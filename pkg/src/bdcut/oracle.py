"""Exhaustive reference solver.

Enumerates every assignment of the non-terminal vertices and checks the
problem definition literally.  Only the multigraph primitives are shared
with the FPT solver.
"""

from __future__ import annotations

from itertools import combinations

from .flow import Cut
from .multigraph import components
from .solver import INFEASIBLE, Instance, InstanceError, Verdict

MAX_FREE = 25
MAX_DEFINITIONAL = 12


def _crossing(g, v1):
    """Indices of edges with exactly one endpoint in ``v1``."""
    return frozenset(i for i, (x, y) in enumerate(g.edges) if (x in v1) != (y in v1))


def _proper_supersets_of(fixed, side):
    """Sets ``X`` with ``fixed <= X < side``."""
    free = sorted(side - fixed)
    for r in range(len(free)):
        for extra in combinations(free, r):
            yield fixed | frozenset(extra)


def minimality_definitional(inst: Instance, c) -> bool:
    """Minimality by brute force over all smaller sides.

    The cut is minimal unless some ``A <= V1' < V1`` or ``B <= V2' < V2``
    has its crossing edge set contained in that of ``c``.
    """
    g = inst.g
    if g.n > MAX_DEFINITIONAL:
        raise InstanceError(f"definitional minimality check limited to n <= {MAX_DEFINITIONAL}")
    v1, v2 = frozenset(c[0]), frozenset(c[1])
    if v1 & v2 or len(v1 | v2) != g.n or not v1 >= set(inst.a) or not v2 >= set(inst.b):
        raise InstanceError("not an (A,B)-cut")
    full = _crossing(g, v1)
    everything = frozenset(range(g.n))
    for x in _proper_supersets_of(frozenset(inst.a), v1):
        if _crossing(g, x) <= full:
            return False
    for y in _proper_supersets_of(frozenset(inst.b), v2):
        if _crossing(g, everything - y) <= full:
            return False
    return True


def _minimal_by_components(inst, v1, v2):
    a, b = set(inst.a), set(inst.b)
    return all(a.intersection(comp) for comp in components(inst.g, v1)) and all(
        b.intersection(comp) for comp in components(inst.g, v2)
    )


def brute_force_solve(inst: Instance) -> Verdict:
    """First feasible cut in binary-counting order over the free vertices."""
    g = inst.g
    a, b = frozenset(inst.a), frozenset(inst.b)
    free = [v for v in range(g.n) if v not in a and v not in b]
    if len(free) > MAX_FREE:
        raise InstanceError(f"oracle limited to {MAX_FREE} free vertices")
    definitional = g.n <= MAX_DEFINITIONAL
    for mask in range(1 << len(free)):
        v1 = set(a)
        v1.update(v for j, v in enumerate(free) if mask >> j & 1)
        v1 = frozenset(v1)
        if sum((x in v1) != (y in v1) for x, y in g.edges) > inst.k:
            continue
        inside = [0] * g.n
        for x, y in g.edges:
            if (x in v1) == (y in v1):
                inside[x] += 1
                inside[y] += 1
        if any(inside[v] > (inst.u_a[v] if v in v1 else inst.u_b[v]) for v in range(g.n)):
            continue
        cut = Cut.from_side(g, v1)
        v2 = frozenset(cut.v2)
        ok = minimality_definitional(inst, cut) if definitional else _minimal_by_components(inst, v1, v2)
        if ok:
            return Verdict(True, cut)
    return INFEASIBLE
