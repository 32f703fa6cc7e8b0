"""
Homology of digital spheres
===========================

Homology is computed on the clique complex, with exact integer Smith
normal form.  The 26-point model of the 2-sphere has no triangles at all,
so its first homology is huge and its second vanishes.
"""

from digitop.constructions import sphere
from digitop.homology import homology_groups, simplex_counts, euler_characteristic, smith_normal_form

S1, S2 = sphere(1), sphere(2)
print("S1 simplex counts:", simplex_counts(S1), "homology:", [str(h) for h in homology_groups(S1)])
print("S2 simplex counts:", simplex_counts(S2))
print("S2 homology up to q=2:", [str(h) for h in homology_groups(S2, 2)])
print("chi(S2) =", euler_characteristic(S2))

# The diagonal of a Smith normal form divides down the line.
r = smith_normal_form([[2, 0], [0, 3]])
print("SNF of diag(2,3):", r.diagonal)
