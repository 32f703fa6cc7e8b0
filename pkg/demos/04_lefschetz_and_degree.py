"""
Lefschetz numbers and degrees
=============================

A nonzero Lefschetz number does not force a fixed point here: the flip of
[0, 1] has Lefschetz number 1 and moves both points.  Degree is read off on
a generator of H_1 of a curve.
"""

from digitop.constructions import interval, sphere, antipode_map, scc
from digitop.invariants import lefschetz_number, degree
from digitop.maps import DigitalMap, collapse_map, fixed_points

I = interval(0, 1)
F = DigitalMap(I, I, [1, 0])
print("lambda(F) =", lefschetz_number(F), "fixed points:", fixed_points(F))

S1 = sphere(1)
print("deg antipode on S1:", degree(antipode_map(S1), 1))
print("deg collapse on S1:", degree(collapse_map(S1), 1))
print("deg antipode on S2:", degree(antipode_map(sphere(2)), 2))

# On the 4-point curve a reflection sits one step from a map of degree 0.
C = scc(4)
ref = DigitalMap(C, C, [0, 3, 2, 1])
lazy = DigitalMap(C, C, [0, 0, 3, 0])
print("reflection:", degree(ref, 1), " neighbour:", degree(lazy, 1))
