"""Closed-form reference results for the chain with the field along x.

With the field along x the Hamiltonian is diagonal in the product basis of
``L^x`` eigenstates, so its spectrum is the classical energy

    E(m) = J * sum_k m_k m_{k+1} + B * sum_k m_k,   m_k in {-1, +1} or {-1, 0, +1}.

Configurations are written as strings over ``+``, ``0`` and ``-``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .circuit import Circuit, solid_angle_polygon
from .spin_ops import parse_spin

__all__ = [
    "ClassicalGroundInfo",
    "critical_coupling",
    "hx_ground",
    "hx_brute_force",
    "noninteracting_phase",
    "BERRY_SIGN",
]

#: sign relating the Bargmann phase of the field-antialigned ground state to
#: +(solid angle)/2 of a counter-clockwise circuit. Fixed once against the
#: single-spin pipeline at J = 0 (see tests/test_analytic.py).
BERRY_SIGN = -1

BRUTE_FORCE_CAP = 2_000_000
_CHARS = {-1: "-", 0: "0", 1: "+"}


@dataclass(frozen=True)
class ClassicalGroundInfo:
    energy: float
    degeneracy: int
    states: tuple

    def to_dict(self) -> dict:
        return {"energy": self.energy, "degeneracy": self.degeneracy, "states": list(self.states)}


def critical_coupling(B: float) -> float:
    return abs(B) / 2


def _encode(m) -> str:
    return "".join(_CHARS[int(v)] for v in m)


def _classical_energy(m: np.ndarray, J: float, B: float) -> np.ndarray:
    # literal periodic sum; for N = 2 the single bond is counted twice
    return J * np.sum(m * np.roll(m, -1, axis=-1), axis=-1) + B * np.sum(m, axis=-1)


def _check(N, s):
    if int(N) != N or N < 1:
        raise ValueError(f"chain length must be a positive integer, got {N!r}")
    return int(N), parse_spin(s)


def hx_brute_force(N: int, J: float, B: float, s="1/2", *, rtol: float = 1e-12) -> ClassicalGroundInfo:
    """Exhaustive minimisation over every classical configuration.

    Configurations within ``rtol * (|J| + |B|) * N`` of the minimum count as
    degenerate. Limited to ``d**N <= 2e6``.
    """
    N, s = _check(N, s)
    d = int(2 * s + 1)
    if d**N > BRUTE_FORCE_CAP:
        raise ValueError(f"{d}**{N} configurations exceed the enumeration cap {BRUTE_FORCE_CAP}")
    values = np.array([1, -1] if d == 2 else [1, 0, -1], dtype=np.int8)
    idx = np.arange(d**N)
    digits = (idx[:, None] // d ** np.arange(N - 1, -1, -1)) % d
    m = values[digits].astype(float)
    E = _classical_energy(m, J, B)
    e0 = E.min()
    tol = rtol * max(1.0, (abs(J) + abs(B)) * N)
    hit = np.flatnonzero(E <= e0 + tol)
    return ClassicalGroundInfo(float(e0), len(hit), tuple(_encode(m[i]) for i in hit))


def _lucas(N: int) -> int:
    a, b = 2, 1
    for _ in range(N):
        a, b = b, a + b
    return a


def _independent_sets(N: int, k: int | None = None):
    """Subsets of ring sites with no two neighbours (sites 1 and N adjacent)."""
    for bits in itertools.product((0, 1), repeat=N):
        if N > 1 and any(bits[i] and bits[(i + 1) % N] for i in range(N)):
            continue
        if k is None or sum(bits) == k:
            yield bits


def hx_ground(N: int, J: float, B: float, s="1/2") -> ClassicalGroundInfo:
    """Ground energy, degeneracy and ground configurations of H_x.

    Spin 1/2 uses the closed forms: below the critical coupling the fully
    field-aligned state with ``E = N (J - |B|)``; above it the Neel pair with
    ``E = -N J`` for even N, or the N translations of the alternating pattern
    with one frustrated bond and ``E = -N J + 2 (J - |B|/2)`` for odd N. At
    exactly ``J = |B|/2`` every configuration whose minority spins are
    pairwise non-adjacent is a ground state (a Lucas number of them).
    Spin 1 is resolved by enumeration.
    """
    N, s = _check(N, s)
    if s == Fraction(1):
        return hx_brute_force(N, J, B, s)
    if N < 2:
        raise ValueError("the closed forms need N >= 2")
    J, B = float(J), float(B)
    Jc = critical_coupling(B)
    maj, mino = ("-", "+") if B >= 0 else ("+", "-")

    def pattern(bits):
        return "".join(mino if b else maj for b in bits)

    if B == 0.0:
        if J == 0.0:
            states = tuple("".join(p) for p in itertools.product("+-", repeat=N))
            return ClassicalGroundInfo(0.0, 2**N, states)
        if J < 0:
            return ClassicalGroundInfo(N * J, 2, ("+" * N, "-" * N))
        if N % 2 == 0:
            return ClassicalGroundInfo(-N * J, 2, (("+-" * N)[:N], ("-+" * N)[:N]))
        states = tuple(sorted({pattern(b) for b in _independent_sets(N, (N - 1) // 2)}
                              | {pattern(tuple(1 - x for x in b)) for b in _independent_sets(N, (N - 1) // 2)}))
        return ClassicalGroundInfo(-N * J + 2 * J, 2 * N, states)
    if J < Jc:
        return ClassicalGroundInfo(N * (J - 2 * Jc), 1, (maj * N,))
    if J == Jc:
        states = tuple(pattern(b) for b in _independent_sets(N))
        assert len(states) == _lucas(N)
        return ClassicalGroundInfo(N * (J - 2 * Jc), len(states), states)
    k = N // 2
    if N % 2 == 0:
        return ClassicalGroundInfo(-N * J, 2, tuple(pattern(b) for b in _independent_sets(N, k)))
    states = tuple(pattern(b) for b in _independent_sets(N, k))
    return ClassicalGroundInfo(-N * J + 2 * (J - Jc), N, states)


def noninteracting_phase(N: int, s, circuit: Circuit) -> float:
    """Bargmann phase of N uncoupled spins at B = 1 around ``circuit``.

    ``N * 2s * (solid angle)/2`` with the calibrated sign, wrapped to (-pi, pi].
    """
    N, s = _check(N, s)
    omega = solid_angle_polygon(circuit)
    phi = BERRY_SIGN * N * float(2 * s) * omega / 2
    wrapped = float(np.angle(np.exp(1j * phi)))
    return np.pi if wrapped == -np.pi else wrapped
