"""
Berry phase of free spins
=========================

At J = 0 the spins decouple and the Bargmann phase around the polygon is
minus half the enclosed solid angle per spin-1/2, doubling for spin 1.
"""

import numpy as np

from bargmann_chain import ChainParams, noninteracting_phase, polygon_circuit, solid_angle_circumdisk, sweep

r = 0.5
smooth = -solid_angle_circumdisk(r) / 2
for M in (20, 50, 100, 200):
    c = polygon_circuit(M, r)
    phi = sweep(ChainParams(1), c, [0.0]).phase[0]
    print(f"M = {M:3d}  phase = {phi:.8f}  polygon prediction = {noninteracting_phase(1, '1/2', c):.8f}  "
          f"distance to smooth circuit = {abs(phi - smooth):.2e}")

c = polygon_circuit(200, r)
for N, s in ((1, "1/2"), (2, "1/2"), (1, "1"), (3, "1")):
    phi = sweep(ChainParams(N, s), c, [0.0]).phase[0]
    print(f"N = {N}, s = {s:3s}: phase {phi:+.6f}  prediction {noninteracting_phase(N, s, c):+.6f}")
