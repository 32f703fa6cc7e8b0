"""
Fixed points and approximate fixed points
=========================================

Only one-point images force a fixed point.  Asking for a point that moves
to itself or a neighbour is a much weaker demand, and cubes satisfy it.
"""

from digitop.constructions import interval, cube, scc
from digitop.maps import approximate_fixed_points
from digitop.search import has_fpp, has_afpp

# Every image with two or more points has a fixed-point-free continuous map.
v = has_fpp(interval(0, 3))
print("[0,3] has FPP:", v.holds)
print("witness:", v.witness.as_dict())

# Cubes with c_n adjacency have the approximate fixed point property.
for lengths in ([4], [2, 2], [1, 1, 1]):
    print(f"cube{lengths} AFPP:", has_afpp(cube(lengths)).holds)

# A simple closed curve does not: rotate by two steps.
v = has_afpp(scc(8))
print("scc(8) AFPP:", v.holds, "witness table:", v.witness.table)
print("approximate fixed points of witness:", approximate_fixed_points(v.witness))
