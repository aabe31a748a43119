"""
Candidate families for cut traces
=================================

The families below list every possible intersection of the source side of
a small minimal cut with a vertex set, without enumerating the cuts.
"""

from bdcut.candidates import candidate_family_bounded_trace, candidate_family_neighbor_trace
from bdcut.multigraph import MultiGraph

# a=0, x=1, y=2, b=3 with a side branch through y
g = MultiGraph(4, [(0, 1), (1, 3), (0, 2), (2, 3), (1, 2)])

fam = candidate_family_bounded_trace(g, [0], [3], c=[1, 2], k=3, ell=2)
print("traces on {x, y}:", fam)

fam = candidate_family_neighbor_trace(g, [0], [3], [3], k=2)
print("traces on N(b):", fam)
