"""
Multigraphs, minimum cuts and the MM cut
=========================================

Parallel edges count with multiplicity everywhere: in degrees, in cut
sizes and in max-flow capacities.
"""

from bdcut.flow import min_cut_value, mm_cut
from bdcut.multigraph import MultiGraph, components, degree, degree_in

# a=0, x=1, y=2, t=3; the x-y edge makes {a,x,y} the largest minimum source side
g = MultiGraph(4, [(0, 1), (0, 2), (1, 3), (2, 3), (1, 2)])
print("degree of x:", degree(g, 1), " into {a}:", degree_in(g, 1, {0}))

print("min (a,t)-cut value:", min_cut_value(g, [0], [3]))
cut = mm_cut(g, [0], [3])
print("MM cut:", cut, "size", cut.size(g))

# a doubled edge is two units of capacity
double = MultiGraph(2, [(0, 1), (0, 1)])
print("double edge cut:", min_cut_value(double, [0], [1]))

# the components of an induced subgraph decide minimality of a cut
print("components of G[{a, t}]:", components(g, [0, 3]))
