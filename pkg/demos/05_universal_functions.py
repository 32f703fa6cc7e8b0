"""
Universal functions and wedges
==============================

A map f is universal when every continuous g agrees with it up to
adjacency somewhere.  The identity is universal exactly when the image has
the approximate fixed point property.
"""

from digitop.constructions import interval, scc, wedge, product
from digitop.maps import identity_map, constant_map
from digitop.search import is_universal, is_dominating, has_afpp

for X in (interval(0, 3), scc(6)):
    print(len(X), "points, identity universal:", is_universal(identity_map(X)).holds,
          " AFPP:", has_afpp(X).holds)

# A constant map is universal only when its value dominates the image.
I = interval(0, 2)
print("{1} dominates [0,2]:", is_dominating([(1,)], I),
      " constant 1 universal:", is_universal(constant_map(I, I, (1,))).holds)

# Gluing two intervals keeps the AFPP; gluing in a curve loses it.
W = wedge(interval(0, 2), (2,), interval(0, 1), (0,))
print("interval v interval AFPP:", has_afpp(W.image).holds)
W = wedge(interval(0, 2), (2,), scc(4), (0, 0))
print("interval v curve AFPP:", has_afpp(W.image).holds)

# Products of c_n cubes stay in the family.
P = product([interval(0, 1), interval(0, 2)])
print("[0,1] x [0,2] AFPP:", has_afpp(P).holds)
