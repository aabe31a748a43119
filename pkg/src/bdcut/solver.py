"""Bounded-degree cut: instances, feasibility checks and the FPT solver.

The solver reduces an instance to a bounded number of *easy* instances.
Stage 1 guesses which unsatisfied vertices sit on which side, stage 2
guesses the sides of their neighbours, and every resulting easy instance is
decided with max-flow computations.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional

from .candidates import (
    candidate_family_bounded_trace,
    candidate_family_neighbor_trace,
    disjoint_pairs,
)
from .flow import Cut, min_cut_value, min_side, mm_side
from .multigraph import GraphError, MultiGraph, anchored, components, cut_size, degree_in, neighbors_of_set, vset


class InstanceError(ValueError):
    """Invalid instance or argument that violates a precondition."""


class SolverBug(RuntimeError):
    """A witness failed re-verification against the original instance."""


@dataclass(frozen=True)
class Instance:
    g: MultiGraph
    a: tuple
    b: tuple
    u_a: tuple
    u_b: tuple
    k: int

    def __post_init__(self):
        n, m = self.g.n, self.g.m
        object.__setattr__(self, "a", vset(self.a))
        object.__setattr__(self, "b", vset(self.b))
        object.__setattr__(self, "u_a", tuple(self.u_a))
        object.__setattr__(self, "u_b", tuple(self.u_b))
        if not self.a or not self.b:
            raise InstanceError("terminal sets must be nonempty")
        if set(self.a) & set(self.b):
            raise InstanceError("terminal sets overlap")
        for v in self.a + self.b:
            if not 0 <= v < n:
                raise InstanceError(f"terminal {v} outside [0, {n})")
        if len(self.u_a) != n or len(self.u_b) != n:
            raise InstanceError("degree caps must be given for every vertex")
        if any(not 0 <= c <= m for c in self.u_a + self.u_b):
            raise InstanceError(f"degree caps must lie in [0, {m}]")
        if self.k < 0:
            raise InstanceError("k must be nonnegative")

    @classmethod
    def build(cls, g: MultiGraph, a, b, k: int, u_a=None, u_b=None) -> "Instance":
        """Instance with caps given as sparse dicts; missing caps default to ``m``."""
        caps_a = [g.m] * g.n
        caps_b = [g.m] * g.n
        for v, c in (u_a or {}).items():
            caps_a[v] = c
        for v, c in (u_b or {}).items():
            caps_b[v] = c
        return cls(g, a, b, caps_a, caps_b, k)

    def with_terminals(self, a, b) -> "Instance":
        return replace(self, a=a, b=b)

    def relabel(self, perm) -> "Instance":
        inv = [0] * len(perm)
        for v, p in enumerate(perm):
            inv[p] = v
        return Instance(
            self.g.relabel(perm),
            [perm[v] for v in self.a],
            [perm[v] for v in self.b],
            [self.u_a[inv[p]] for p in range(self.g.n)],
            [self.u_b[inv[p]] for p in range(self.g.n)],
            self.k,
        )


@dataclass(frozen=True)
class UnsatProfile:
    z_a: tuple
    z_b: tuple


@dataclass(frozen=True)
class CutClassification:
    z_a1: tuple
    z_a2: tuple
    z_b1: tuple
    z_b2: tuple
    w_a1: tuple
    w_a2: tuple
    w_b1: tuple
    w_b2: tuple
    a_pi: tuple
    b_pi: tuple


@dataclass(frozen=True)
class Verdict:
    feasible: bool
    witness: Optional[Cut] = None


@dataclass
class SolveStats:
    """Guess counts seen during one :func:`solve` call."""

    stage1: int = 0
    stage2_max: int = 0
    easy_total: int = 0
    easy_solved: int = 0
    stage2_counts: list = field(default_factory=list)


INFEASIBLE = Verdict(False)


def unsat_profile(inst: Instance) -> UnsatProfile:
    g = inst.g
    deg = [len(g.adj[v]) for v in range(g.n)]
    return UnsatProfile(
        tuple(v for v in range(g.n) if deg[v] > inst.u_a[v]),
        tuple(v for v in range(g.n) if deg[v] > inst.u_b[v]),
    )


def _as_cut(inst, c):
    """Sides of ``c`` as frozensets, or None if it is not an (A,B)-cut."""
    try:
        v1, v2 = frozenset(c[0]), frozenset(c[1])
    except (TypeError, IndexError):
        return None
    n = inst.g.n
    if v1 & v2 or len(v1) + len(v2) != n or not all(0 <= v < n for v in v1 | v2):
        return None
    if not v1.issuperset(inst.a) or not v2.issuperset(inst.b):
        return None
    return v1, v2


def is_minimal_cut(inst: Instance, c: Cut) -> bool:
    """Every component of ``G[V1]`` meets A and every component of ``G[V2]`` meets B."""
    sides = _as_cut(inst, c)
    if sides is None:
        raise InstanceError("not an (A,B)-cut")
    v1, v2 = sides
    return anchored(inst.g, v1, inst.a) and anchored(inst.g, v2, inst.b)


def verify_solution(inst: Instance, c) -> bool:
    sides = _as_cut(inst, c)
    if sides is None:
        return False
    v1, v2 = sides
    g = inst.g
    if cut_size(g, v1) > inst.k:
        return False
    if any(degree_in(g, v, v1) > inst.u_a[v] for v in v1):
        return False
    if any(degree_in(g, v, v2) > inst.u_b[v] for v in v2):
        return False
    return anchored(g, v1, inst.a) and anchored(g, v2, inst.b)


def classify(inst: Instance, c: Cut) -> CutClassification:
    """Split the unsatisfied vertices and their neighbourhoods by the sides of ``c``."""
    g = inst.g
    v1, v2 = frozenset(c[0]), frozenset(c[1])
    prof = unsat_profile(inst)
    z_a1 = vset(v for v in prof.z_a if v in v1)
    z_a2 = vset(v for v in prof.z_a if v in v2)
    z_b1 = vset(v for v in prof.z_b if v in v1)
    z_b2 = vset(v for v in prof.z_b if v in v2)
    w_a = neighbors_of_set(g, z_a1)
    w_b = neighbors_of_set(g, z_b2)
    w_a1 = vset(v for v in w_a if v in v1)
    w_a2 = vset(v for v in w_a if v in v2)
    w_b1 = vset(v for v in w_b if v in v1)
    w_b2 = vset(v for v in w_b if v in v2)
    return CutClassification(
        z_a1, z_a2, z_b1, z_b2, w_a1, w_a2, w_b1, w_b2,
        vset(inst.a + z_a1 + z_b1 + w_a1 + w_b1),
        vset(inst.b + z_a2 + z_b2 + w_a2 + w_b2),
    )


def is_easy(inst: Instance) -> bool:
    prof = unsat_profile(inst)
    ab = set(inst.a) | set(inst.b)
    if not ab.issuperset(prof.z_a) or not ab.issuperset(prof.z_b):
        return False
    a, b = set(inst.a), set(inst.b)
    za_in_a = [v for v in prof.z_a if v in a]
    zb_in_b = [v for v in prof.z_b if v in b]
    return ab.issuperset(neighbors_of_set(inst.g, za_in_a)) and ab.issuperset(
        neighbors_of_set(inst.g, zb_in_b)
    )


def _covers_components(g: MultiGraph, terminals) -> bool:
    """Every connected component of ``g`` contains a terminal."""
    return anchored(g, range(g.n), terminals)


def _bad_component(g, side, roots):
    """A component of ``G[side]`` missing ``roots`` (as a set), or None."""
    seen = {r for r in roots if r in side}
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for u, _ in g.adj[v]:
            if u in side and u not in seen:
                seen.add(u)
                queue.append(u)
    if len(seen) == len(side):
        return None
    return frozenset(components(g, side - seen)[0])


def _border(g, comp):
    return sorted({u for v in comp for u, _ in g.adj[v] if u not in comp})


def anchored_extension(g: MultiGraph, a: frozenset, b: frozenset, roots_a, roots_b, k: int):
    """Source side of an (A,B)-cut of size <= k whose source components all
    meet ``roots_a`` and whose sink components all meet ``roots_b``; None if
    there is none.

    Needs ``roots_a <= a``, ``roots_b <= b`` and every component of ``g``
    meeting ``roots_a | roots_b``.  The MM cut is tried first.  A component
    of the source side that misses ``roots_a`` must, in any valid cut, be
    joined to the roots through one of its (at most k) outside neighbours,
    so the search branches on which neighbour goes to the source; the MM
    cut is source-maximal, so the min-cut value strictly grows in each
    branch.  The sink side is handled the same way using the source-minimal
    cut, falling back to the MM cut's sink side, where the source side
    strictly shrinks instead.
    """
    roots_a = frozenset(roots_a)
    roots_b = frozenset(roots_b)
    seen = set()

    def search(a, b):
        if (a, b) in seen:
            return None
        seen.add((a, b))
        _, side = mm_side(g, a, b, limit=k)
        if side is None:
            return None
        comp = _bad_component(g, side, roots_a)
        if comp is not None:
            for w in _border(g, comp):
                if w not in b:
                    found = search(a | {w}, b)
                    if found is not None:
                        return found
            return None
        rest = frozenset(range(g.n)) - side
        comp = _bad_component(g, rest, roots_b)
        if comp is None:
            return side
        _, small = min_side(g, a, b)
        bad = _bad_component(g, frozenset(range(g.n)) - small, roots_b)
        if bad is not None:
            comp = bad
        for w in _border(g, comp):
            if w not in a:
                found = search(a, b | {w})
                if found is not None:
                    return found
        return None

    return search(frozenset(a), frozenset(b))


def solve_easy(inst: Instance, roots=None) -> Verdict:
    """Decide an easy instance in polynomial time (plus a short branching
    step when ``roots`` is given).

    ``roots = (A0, B0)`` names the terminals of the instance the easy one
    was derived from; the witness must then be minimal with respect to
    those, which is what feasibility for the original instance requires.
    Without ``roots`` the instance's own terminals are used.
    """
    if not is_easy(inst):
        raise InstanceError("solve_easy needs an easy instance")
    g = inst.g
    a, b = frozenset(inst.a), frozenset(inst.b)
    roots_a, roots_b = (a, b) if roots is None else (frozenset(roots[0]), frozenset(roots[1]))
    if not roots_a <= a or not roots_b <= b:
        raise InstanceError("roots must be contained in the terminal sets")
    if not _covers_components(g, roots_a | roots_b):
        return INFEASIBLE
    prof = unsat_profile(inst)
    for v in prof.z_a:
        if v in a and degree_in(g, v, a) > inst.u_a[v]:
            return INFEASIBLE
    for v in prof.z_b:
        if v in b and degree_in(g, v, b) > inst.u_b[v]:
            return INFEASIBLE
    if min_cut_value(g, a, b, limit=inst.k) > inst.k:
        return INFEASIBLE
    side = anchored_extension(g, a, b, roots_a, roots_b, inst.k)
    if side is None:
        return INFEASIBLE
    return Verdict(True, Cut.from_side(g, side))


def stage1_guesses(inst: Instance) -> list[tuple[Instance, tuple, tuple]]:
    """Instances ``(G, A', B')`` placing every unsatisfied vertex on a side.

    Returns ``(instance, z_a1, z_b2)`` triples where ``z_a1`` is the guessed
    set of A-unsatisfied vertices on the A side and ``z_b2`` the guessed set
    of B-unsatisfied vertices on the B side.
    """
    g, k = inst.g, inst.k
    prof = unsat_profile(inst)
    a, b = frozenset(inst.a), frozenset(inst.b)
    fam_a = candidate_family_bounded_trace(g, a, b, prof.z_a, k, k)
    if not fam_a:
        return []
    fam_b = candidate_family_bounded_trace(g, b, a, prof.z_b, k, k)
    za, zb = frozenset(prof.z_a), frozenset(prof.z_b)
    out = []
    for x1, x2 in disjoint_pairs(fam_a, fam_b):
        s1, s2 = frozenset(x1), frozenset(x2)
        if s1 & b or s2 & a:
            continue
        a1 = a | s1 | (zb - s2)
        b1 = b | (za - s1) | s2
        if a1 & b1:
            continue
        out.append((inst.with_terminals(a1, b1), x1, x2))
    return out


def stage2_guesses(inst1: Instance, z_a1, z_b2) -> list[Instance]:
    """Easy instances obtained by also placing the neighbours of ``z_a1`` and ``z_b2``."""
    g, k = inst1.g, inst1.k
    a, b = frozenset(inst1.a), frozenset(inst1.b)
    w_a = frozenset(neighbors_of_set(g, z_a1))
    w_b = frozenset(neighbors_of_set(g, z_b2))
    fam_1 = candidate_family_neighbor_trace(g, a, b, z_b2, k)
    if not fam_1:
        return []
    fam_2 = candidate_family_neighbor_trace(g, b, a, z_a1, k)
    out = []
    for y1, y2 in disjoint_pairs(fam_1, fam_2):
        s1, s2 = frozenset(y1), frozenset(y2)
        a2 = a | s1 | (w_a - s2)
        b2 = b | s2 | (w_b - s1)
        if a2 & b2:
            continue
        cand = inst1.with_terminals(a2, b2)
        if is_easy(cand):
            out.append(cand)
    return out


def solve(inst: Instance, stats: SolveStats | None = None) -> Verdict:
    """Decide ``inst``; a feasible verdict carries a verified witness.

    Guesses are explored in canonical family order and the first feasible
    easy instance wins, so the witness is deterministic.
    """
    if stats is None:
        stats = SolveStats()
    g = inst.g
    roots = (inst.a, inst.b)
    if not _covers_components(g, inst.a + inst.b):
        return INFEASIBLE
    tried = set()
    guesses = stage1_guesses(inst)
    stats.stage1 = len(guesses)
    for inst1, z_a1, z_b2 in guesses:
        easy = stage2_guesses(inst1, z_a1, z_b2)
        stats.stage2_counts.append(len(easy))
        stats.stage2_max = max(stats.stage2_max, len(easy))
        stats.easy_total += len(easy)
        for inst2 in easy:
            key = (inst2.a, inst2.b)
            if key in tried:
                continue
            tried.add(key)
            stats.easy_solved += 1
            verdict = solve_easy(inst2, roots=roots)
            if verdict.feasible:
                if not verify_solution(inst, verdict.witness):
                    raise SolverBug(f"witness {verdict.witness} fails verification")
                return verdict
    return INFEASIBLE


def guess_counts(inst: Instance) -> SolveStats:
    """Full stage-1 / stage-2 counts without early exit."""
    stats = SolveStats()
    guesses = stage1_guesses(inst)
    stats.stage1 = len(guesses)
    for inst1, z_a1, z_b2 in guesses:
        c = len(stage2_guesses(inst1, z_a1, z_b2))
        stats.stage2_counts.append(c)
        stats.stage2_max = max(stats.stage2_max, c)
        stats.easy_total += c
    return stats
