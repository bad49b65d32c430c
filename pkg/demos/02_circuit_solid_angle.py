"""
Polygon circuits on the Bloch sphere
====================================

The field direction visits the vertices of a small regular polygon centred
near the x axis. The signed solid angle it encloses fixes the geometric phase
of non-interacting spins.
"""

import numpy as np

from bargmann_chain import polygon_circuit, solid_angle_circumdisk, solid_angle_cone, solid_angle_polygon

c = polygon_circuit(6, 0.2)
np.set_printoptions(precision=5, suppress=True)
print(c.vertices)

# more vertices fill in the circumscribed disk from below
r = 0.5
for M in (6, 20, 100, 1000):
    print(f"M = {M:5d}   polygon area = {solid_angle_polygon(polygon_circuit(M, r)):.8f}")
print(f"limit disk         = {solid_angle_circumdisk(r):.8f}")

# the cone formula only agrees with the limit to leading order in r
for r in (1e-5, 1e-2, 0.5):
    print(f"r = {r:g}: cone {solid_angle_cone(r):.6e}  limit {solid_angle_circumdisk(r):.6e}")

# clockwise traversal flips the sign
print(solid_angle_polygon(polygon_circuit(50, 0.3, reverse=True)), solid_angle_polygon(polygon_circuit(50, 0.3)))
