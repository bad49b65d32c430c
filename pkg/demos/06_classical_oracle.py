"""
Classical ground states with the field along x
==============================================

With the field along x the Hamiltonian is diagonal in the x basis. Below
J = B/2 every spin points against the field; above it neighbours alternate,
with one frustrated bond on odd rings.
"""

from bargmann_chain import hx_brute_force, hx_ground

for N in (4, 5):
    for J in (0.2, 0.5, 1.0):
        g = hx_ground(N, J, 1.0)
        shown = ", ".join(g.states[:6]) + (" ..." if g.degeneracy > 6 else "")
        print(f"N = {N}, J = {J}: E0 = {g.energy:+.3f}, degeneracy {g.degeneracy}: {shown}")

# spin 1 is settled by enumeration
for J in (0.4, 0.5, 0.6):
    g = hx_brute_force(4, J, 1.0, "1")
    print(f"spin 1, N = 4, J = {J}: E0 = {g.energy:+.3f}, degeneracy {g.degeneracy}")
