"""
Important cuts
==============

An important cut cannot be pushed further towards the sink without growing.
At most ``4**k`` of them have size at most ``k``.
"""

from bdcut.flow import Cut
from bdcut.impcut import enumerate_important_cuts, is_important_cut
from bdcut.multigraph import MultiGraph

# 4-cycle s=0, v1=1, t=2, v2=3: every source side has size 2, so only the
# largest one survives
square = MultiGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
print(enumerate_important_cuts(square, [0], [2], 2))
print("({s}, rest) important?", is_important_cut(square, Cut((0,), (1, 2, 3)), [0], [2]))

# a ladder gives several incomparable important cuts
ladder = MultiGraph(6, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)])
for k in range(4):
    cuts = enumerate_important_cuts(ladder, [0, 3], [2, 5], k)
    print(f"k={k}: {len(cuts)} important cuts (bound {4 ** k})")
    for c in cuts:
        print("   ", c.v1, "size", c.size(ladder))
