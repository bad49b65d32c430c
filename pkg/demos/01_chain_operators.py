"""
Building the spin-chain Hamiltonian
===================================

A ring of N spins with an x-x coupling and a uniform field pointing along a
unit vector n. Operators are sparse, site 1 is the leftmost tensor factor.
"""

import numpy as np

from bargmann_chain import ChainParams, build_hamiltonian, build_hx, local_operators, site_operator

# local spin-1/2 and spin-1 matrices
for s in ("1/2", "1"):
    x, y, z = local_operators(s)
    print(s, "eigenvalues of the z matrix:", np.linalg.eigvalsh(z).round(12))

# one operator placed on the middle site of a three-site chain
p = ChainParams(3)
print(site_operator(local_operators("1/2").x, 2, p).toarray().real.astype(int))

# with the field along x the Hamiltonian is diagonal in the x basis; here it
# is shown in the z basis for N = 4 right at the transition J = B/2
H = build_hx(ChainParams(4, J=0.5, B=1.0))
w = np.linalg.eigvalsh(H.toarray())
print("lowest levels at J = 0.5:", w[:9].round(10))

# tilting the field inside the y-z plane is a rotation, so the spectrum stays put
a = np.linalg.eigvalsh(build_hamiltonian(ChainParams(4, J=0.3), (0, 0, 1)).toarray())
b = np.linalg.eigvalsh(build_hamiltonian(ChainParams(4, J=0.3), (0, 0.6, 0.8)).toarray())
print("max spectral difference under y-z rotation:", np.abs(a - b).max())
