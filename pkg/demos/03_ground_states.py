"""
Ground states: dense and Lanczos
================================

Small problems are diagonalised with LAPACK, larger ones with a restarted
Lanczos iteration. Both return the same gauge-fixed vector.
"""

import time

import numpy as np

from bargmann_chain import ChainParams, build_hamiltonian, ground_state

H = build_hamiltonian(ChainParams(10, J=0.45, B=1.0), (0.2, 0.6, np.sqrt(0.6)))
print("dimension", H.shape[0])

for method in ("dense", "lanczos"):
    t = time.perf_counter()
    g = ground_state(H, method=method)
    print(f"{method:8s} E0 = {g.energy:.12f}  gap = {g.gap:.3e}  residual = {g.residual:.1e}  {time.perf_counter() - t:.2f}s")

a, b = ground_state(H, method="dense"), ground_state(H, method="lanczos")
print("overlap modulus:", abs(np.vdot(a.vector, b.vector)))

# above the critical coupling with the field along x, odd rings are degenerate
g = ground_state(build_hamiltonian(ChainParams(5, J=1.0, B=1.0), (1, 0, 0)))
print("odd ring, J = 1:", g.energy, "degenerate:", g.degenerate)
