"""
Solving bounded-degree cut instances
====================================

The solver returns a verdict with a witness cut; the brute-force oracle
answers the same question by enumeration.
"""

from bdcut import Instance, MultiGraph, brute_force_solve, solve, verify_solution
from bdcut.cli import render_instance
from bdcut.solver import SolveStats, guess_counts

# path a - x - b
g = MultiGraph(3, [(0, 1), (1, 2)])

# x may keep no neighbour on the A side, but one on the B side
inst = Instance.build(g, [0], [2], k=2, u_a={1: 0}, u_b={1: 1})
stats = SolveStats()
verdict = solve(inst, stats)
print(verdict, "verified:", verify_solution(inst, verdict.witness))
print("stage-1 guesses:", stats.stage1, " easy instances solved:", stats.easy_solved)

# with no room on either side there is no solution
tight = Instance.build(g, [0], [2], k=2, u_a={1: 0}, u_b={1: 0})
print(solve(tight), brute_force_solve(tight))

# z (no B-side neighbours allowed) reaches a only through p, which has a
# triple edge to b; the solution must route through p
a, p, z, b = 0, 1, 2, 3
g = MultiGraph(4, [(a, p), (p, z), (p, b), (p, b), (p, b), (z, b)])
inst = Instance.build(g, [a], [b], k=4, u_b={z: 0})
print(solve(inst).witness, "oracle:", brute_force_solve(inst).feasible)
print(guess_counts(inst))
print(render_instance(inst))
