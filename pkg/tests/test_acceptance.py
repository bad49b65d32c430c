"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Heavy sweeps are computed once per session and shared between criteria.
"""

import time
from functools import lru_cache

import numpy as np
import pytest

from bargmann_chain.analytic import BERRY_SIGN, critical_coupling, hx_ground
from bargmann_chain.bargmann import bargmann_invariant, ground_states_on_circuit, sweep
from bargmann_chain.circuit import polygon_circuit, solid_angle_circumdisk, solid_angle_polygon
from bargmann_chain.groundstate import dense_spectrum
from bargmann_chain.spin_ops import ChainParams, build_hx

R = 1e-5
JC = critical_coupling(1.0)
GRID = np.linspace(JC - 2 * R, JC + 2 * R, 201)
STEP = GRID[1] - GRID[0]


@lru_cache(maxsize=None)
def standard_sweep(N, s="1/2", M=100):
    t = time.perf_counter()
    res = sweep(ChainParams(N, s), polygon_circuit(M, R), GRID)
    res.meta["seconds"] = time.perf_counter() - t
    return res


def test_criterion_1_classical_oracle(criterion):
    t = time.perf_counter()
    bad = []
    for N in range(2, 9):
        for J in np.round(np.arange(11) * 0.1, 12):
            for B in (1.0, -1.0):
                w = dense_spectrum(build_hx(ChainParams(N, J=J, B=B)))
                g = hx_ground(N, J, B)
                mult = int(np.sum(w < w[0] + 1e-9))
                if abs(w[0] - g.energy) > 1e-10 or mult != g.degeneracy:
                    bad.append((N, J, B, w[0], g.energy, mult, g.degeneracy))
    dt = time.perf_counter() - t
    ok = not bad and dt < 60
    criterion(1, ok, f"154 cases, {len(bad)} mismatches, {dt:.1f}s")
    assert ok, bad[:5]


def test_criterion_2_gap_closure(criterion):
    t = time.perf_counter()
    gaps = {}
    for N in range(3, 9):
        hi = dense_spectrum(build_hx(ChainParams(N, J=JC + 0.1, B=1.0)))
        lo = dense_spectrum(build_hx(ChainParams(N, J=JC - 0.1, B=1.0)))
        gaps[N] = (hi[1] - hi[0], lo[1] - lo[0])
    dt = time.perf_counter() - t
    ok = all(a < 1e-10 and b > 0.01 for a, b in gaps.values()) and dt < 60
    criterion(2, ok, " ".join(f"N={N}:({a:.1e},{b:.2f})" for N, (a, b) in gaps.items()) + f" {dt:.1f}s")
    assert ok


@pytest.mark.slow
def test_criterion_3_dip_location(criterion):
    info, ok = [], True
    for N in (3, 5, 7, 9):
        res = standard_sweep(N)
        a = res.magnitude
        i = int(np.argmin(a))
        ref = 0.5 * (a[0] + a[-1])
        good = abs(GRID[i] - JC) <= STEP * (1 + 1e-9) and a[i] < 0.2 * ref
        ok &= good
        info.append(f"N={N}: x_min={res.x[i]:+.2f} min/ref={a[i] / ref:.2e}")
    criterion(3, ok, "; ".join(info))
    assert ok


@pytest.mark.slow
def test_criterion_4_sharpening_with_chain_length(criterion):
    widths = [standard_sweep(N).dip_width() / R for N in (3, 5, 7, 9)]
    ok = bool(np.all(np.diff(widths) < 0))
    criterion(4, ok, "half-depth widths / r for N=3,5,7,9: " + ", ".join(f"{w:.4f}" for w in widths))
    assert ok


@pytest.mark.slow
def test_criterion_5_sharpening_with_vertex_count(criterion):
    t = time.perf_counter()
    Ms = (100, 150, 200, 250, 300)
    widths = [standard_sweep(3, "1/2", M).dip_width() / R for M in Ms]
    dt = time.perf_counter() - t
    ok = bool(np.all(np.diff(widths) < 0)) and dt < 600
    criterion(5, ok, "widths / r for M=100..300: " + ", ".join(f"{w:.4f}" for w in widths) + f" ({dt:.0f}s)")
    assert ok


@pytest.mark.slow
def test_criterion_6_speed_peak(criterion):
    res = standard_sweep(3)
    v = res.speed
    k = int(np.argmax(v))
    # interval k joins J_k and J_{k+1}; within one step if either end is
    near = min(abs(GRID[k] - JC), abs(GRID[k + 1] - JC)) <= STEP * (1 + 1e-9)
    ratio = v[k] / np.median(v)
    ok = near and ratio >= 10
    criterion(6, ok, f"argmax interval [{res.x[k]:+.2f}, {res.x[k + 1]:+.2f}] r, max/median = {ratio:.1f}")
    assert ok


@pytest.mark.slow
def test_criterion_7_joined_phase_extent(criterion):
    cases = [(N, "1/2", np.pi * (N - 1) / 2) for N in (3, 5, 7, 9)]
    cases += [(N, "1", np.pi * (N - 1)) for N in (5, 7)]
    info, ok = [], True
    for N, s, target in cases:
        ext = standard_sweep(N, s).extent
        good = abs(ext - target) <= 0.1 * target
        ok &= good
        info.append(f"s={s} N={N}: {ext / np.pi:.3f}pi vs {target / np.pi:.0f}pi ({ext / target:.0%})")
    criterion(7, ok, "; ".join(info))
    assert ok


def _phase_at_zero(N, s, M, r=0.5):
    return float(sweep(ChainParams(N, s), polygon_circuit(M, r), [0.0], threads=1).phase[0])


def _wrapped(a):
    return abs(np.angle(np.exp(1j * a)))


def test_criterion_8_berry_limit(criterion):
    t = time.perf_counter()
    r, Ms = 0.5, (20, 50, 100, 200)
    phi = {M: _phase_at_zero(1, "1/2", M) for M in Ms}
    to_polygon = {M: _wrapped(phi[M] - BERRY_SIGN * solid_angle_polygon(polygon_circuit(M, r)) / 2) for M in Ms}
    # distance to the smooth-circuit (infinitely many vertices) Berry value
    smooth = BERRY_SIGN * solid_angle_circumdisk(r) / 2
    to_limit = [_wrapped(phi[M] - smooth) for M in Ms]
    doubled_N = _wrapped(_phase_at_zero(2, "1/2", 200) - 2 * phi[200])
    doubled_s = _wrapped(_phase_at_zero(1, "1", 200) - 2 * phi[200])
    dt = time.perf_counter() - t
    ok = (
        to_polygon[200] < 1e-3
        and bool(np.all(np.diff(to_limit) < 0))
        and doubled_N < 1e-3
        and doubled_s < 1e-3
        and dt < 60
    )
    criterion(
        8,
        ok,
        f"|phi-Omega_poly/2| at M=200: {to_polygon[200]:.1e}; distance to smooth limit "
        + ", ".join(f"{d:.1e}" for d in to_limit)
        + f"; N=2 doubling {doubled_N:.1e}; s=1 doubling {doubled_s:.1e}; {dt:.1f}s",
    )
    assert ok


def test_criterion_9_gauge_and_cyclic_invariance(criterion):
    rng = np.random.default_rng(9)
    t = time.perf_counter()
    worst_gauge = worst_cyclic = 0.0
    for _ in range(100):
        N = int(rng.integers(2, 6))
        M = int(rng.integers(3, 40))
        c = polygon_circuit(M, float(rng.uniform(1e-5, 0.6)))
        p = ChainParams(N, "1/2", J=float(rng.uniform(0, 1)))
        states = [g.vector for g in ground_states_on_circuit(p, c)]
        C = bargmann_invariant(states).C
        ph = np.exp(2j * np.pi * rng.random(M))
        worst_gauge = max(worst_gauge, abs(bargmann_invariant(ph[:, None] * np.array(states)).C - C))
        k = int(rng.integers(1, M))
        rolled = [g.vector for g in ground_states_on_circuit(p, c.roll(k))]
        worst_cyclic = max(worst_cyclic, abs(bargmann_invariant(rolled).C - C))
    dt = time.perf_counter() - t
    ok = worst_gauge < 1e-12 and worst_cyclic < 1e-12 and dt < 60
    criterion(9, ok, f"100+100 trials, worst gauge {worst_gauge:.1e}, worst cyclic {worst_cyclic:.1e}, {dt:.1f}s")
    assert ok
