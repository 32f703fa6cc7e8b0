"""
Digital images and continuous maps
==================================

A digital image is a finite set of lattice points with an adjacency.
Continuity only asks that adjacent points land on equal or adjacent points.
"""

from digitop import DigitalImage, Cu, components
from digitop.constructions import interval, cube
from digitop.maps import DigitalMap, is_continuous, discontinuities, fixed_points
from digitop.search import count_continuous_maps

# Three points in Z^2: (0,0) and (1,0) touch under c_1, (0,2) is isolated.
X = DigitalImage([(0, 0), (1, 0), (0, 2)], Cu(1))
print("points:", X.points)
print("components:", [[X.points[i] for i in b] for b in components(X)])

# The unit square under c_2 is a complete graph on four points.
square = cube([1, 1])
print("unit square edges:", square.n_edges)

# Maps are index tables. Flipping [0, 4] end to end is continuous.
I = interval(0, 4)
flip = DigitalMap.from_function(I, I, lambda p: (4 - p[0],))
print("flip continuous:", is_continuous(flip), "fixed:", fixed_points(flip))

# Jumping from 0 to 4 breaks an edge.
jump = DigitalMap(I, I, [0, 0, 4, 4, 4])
print("jump breaks edges:", [(I.points[i], I.points[j]) for i, j in discontinuities(jump)])

# Self-maps of [0, 2]: 17 of the 27 tables are continuous.
print("continuous self-maps of [0,2]:", count_continuous_maps(interval(0, 2), interval(0, 2)))
