"""Bargmann-invariant signatures of criticality in small periodic spin chains."""

from .analytic import ClassicalGroundInfo, critical_coupling, hx_brute_force, hx_ground, noninteracting_phase
from .bargmann import (
    BargmannResult,
    SweepError,
    SweepResult,
    bargmann_invariant,
    dip_width,
    join_phase,
    speed,
    sweep,
)
from .circuit import Circuit, polygon_circuit, solid_angle_circumdisk, solid_angle_cone, solid_angle_polygon
from .groundstate import ConvergenceError, GroundSolution, dense_spectrum, ground_state
from .spin_ops import (
    ChainParams,
    build_hamiltonian,
    build_hx,
    chain_terms,
    local_operators,
    site_operator,
    translation_sector,
)

__version__ = "0.1.0"
