"""FPT solver for the bounded-degree cut problem on multigraphs."""

from .flow import Cut, min_cut_value, mm_cut
from .impcut import enumerate_important_cuts, is_important_cut
from .multigraph import GraphError, MultiGraph
from .oracle import brute_force_solve
from .solver import Instance, InstanceError, Verdict, solve, verify_solution

__all__ = [
    "Cut",
    "GraphError",
    "Instance",
    "InstanceError",
    "MultiGraph",
    "Verdict",
    "brute_force_solve",
    "enumerate_important_cuts",
    "is_important_cut",
    "min_cut_value",
    "mm_cut",
    "solve",
    "verify_solution",
]
