"""Bargmann invariants of ground states around a circuit, and J sweeps.

For a closed list of states the Bargmann invariant is the cyclic product of
neighbouring overlaps, ``C = <p0|p1><p1|p2>...<p_{M-1}|p0>``. It does not
depend on the phase chosen for any individual state. Sweeping the coupling
J across the critical point J_c = |B|/2, ``|C|`` collapses towards zero and
``C`` moves fastest in J there.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from .analytic import critical_coupling
from .circuit import Circuit
from .groundstate import ConvergenceError, ground_state
from .spin_ops import ChainParams, chain_terms, translation_sector

__all__ = [
    "BargmannResult",
    "SweepResult",
    "SweepError",
    "bargmann_invariant",
    "ground_states_on_circuit",
    "sweep",
    "speed",
    "join_phase",
    "dip_width",
    "CSV_COLUMNS",
]

NORM_TOL = 1e-10
PHASE_FLOOR = 1e-12
CSV_COLUMNS = ("J", "J_minus_Jc_over_r", "re_C", "im_C", "abs_C", "phi", "phi_joined", "speed", "degenerate_flag")


class SweepError(RuntimeError):
    """A ground-state solve failed inside a sweep."""

    def __init__(self, J: float, vertex: int, cause: Exception):
        super().__init__(f"ground state failed at J={J!r}, vertex {vertex}: {cause}")
        self.J = J
        self.vertex = vertex
        self.cause = cause
        #: samples completed before the failure, in grid order (set by sweep)
        self.partial = None


def _principal(phi: float) -> float:
    return np.pi if phi == -np.pi else float(phi)


@dataclass(frozen=True)
class BargmannResult:
    C: complex
    edge_overlaps: np.ndarray

    @property
    def magnitude(self) -> float:
        return abs(self.C)

    @property
    def phase(self) -> float:
        """arg C in (-pi, pi]."""
        return _principal(np.angle(self.C))


def bargmann_invariant(states) -> BargmannResult:
    """Cyclic product of overlaps ``<psi_s|psi_{s+1}>`` with ``psi_M = psi_0``.

    The closing overlap reuses the first entry of ``states`` itself.
    """
    states = list(states)
    if len(states) < 3:
        raise ValueError("need at least 3 states for a non-trivial Bargmann phase")
    for i, psi in enumerate(states):
        if abs(np.linalg.norm(psi) - 1.0) > NORM_TOL:
            raise ValueError(f"state {i} is not normalised")
    ov = np.array([np.vdot(states[s], states[(s + 1) % len(states)]) for s in range(len(states))])
    return BargmannResult(complex(np.prod(ov)), ov)


def ground_states_on_circuit(params: ChainParams, circuit: Circuit, *, terms=None, method="auto"):
    """Ground-state solutions at every vertex for coupling ``params.J``.

    ``terms`` may be a precomputed (possibly symmetry-projected)
    :class:`~bargmann_chain.spin_ops.ChainTerms`.
    """
    terms = chain_terms(params) if terms is None else terms
    sols = []
    for i, n in enumerate(circuit.vertices):
        try:
            sols.append(ground_state(terms.combine(params.J, params.B, n), method=method))
        except (ConvergenceError, np.linalg.LinAlgError) as exc:
            raise SweepError(params.J, i, exc) from exc
    return sols


@dataclass
class SweepResult:
    """Bargmann invariant against coupling for one chain and circuit."""

    J: np.ndarray
    C: np.ndarray
    degenerate: np.ndarray
    params: ChainParams
    circuit: Circuit
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.J = np.asarray(self.J, dtype=float)
        self.C = np.asarray(self.C, dtype=complex)
        self.degenerate = np.asarray(self.degenerate, dtype=bool)
        if len(self.J) > 1 and np.any(np.diff(self.J) <= 0):
            raise ValueError("J grid must be strictly increasing")

    @property
    def Jc(self) -> float:
        return critical_coupling(self.params.B)

    @property
    def x(self) -> np.ndarray:
        """(J - J_c) / r, NaN for circuits without a radius."""
        r = self.circuit.radius
        return (self.J - self.Jc) / r if r else np.full_like(self.J, np.nan)

    @property
    def magnitude(self) -> np.ndarray:
        return np.abs(self.C)

    @property
    def phase(self) -> np.ndarray:
        ph = np.angle(self.C)
        ph[ph == -np.pi] = np.pi
        return ph

    @property
    def speed(self) -> np.ndarray:
        return speed(self)

    @property
    def joined_phase(self) -> np.ndarray:
        return join_phase(self)[0]

    @property
    def extent(self) -> float:
        return join_phase(self)[1]

    def dip_width(self) -> float:
        return dip_width(self.J, self.magnitude)

    # serialisation

    def rows(self):
        v = speed(self) if len(self.J) > 1 else np.array([])
        joined = join_phase(self)[0] if np.any(self.magnitude >= PHASE_FLOOR) else np.full(len(self.J), np.nan)
        x, mag, ph = self.x, self.magnitude, self.phase
        for i in range(len(self.J)):
            yield {
                "J": self.J[i],
                "J_minus_Jc_over_r": x[i],
                "re_C": self.C[i].real,
                "im_C": self.C[i].imag,
                "abs_C": mag[i],
                "phi": ph[i],
                "phi_joined": joined[i],
                "speed": v[i] if i < len(v) else None,
                "degenerate_flag": int(self.degenerate[i]),
            }

    def to_csv(self, dest=None) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for row in self.rows():
            w.writerow(["" if row[k] is None else repr(float(row[k])) if k != "degenerate_flag" else row[k] for k in CSV_COLUMNS])
        text = buf.getvalue()
        if dest is not None:
            Path(dest).write_text(text)
        return text

    def to_dict(self) -> dict:
        p = self.params
        return {
            "params": {"N": p.N, "s": str(p.s), "B": p.B, "periodic": p.periodic},
            "Jc": self.Jc,
            "circuit": self.circuit.to_dict(),
            "J": self.J.tolist(),
            "re_C": self.C.real.tolist(),
            "im_C": self.C.imag.tolist(),
            "degenerate": self.degenerate.astype(int).tolist(),
            "abs_C": self.magnitude.tolist(),
            "phi": self.phase.tolist(),
            "phi_joined": join_phase(self)[0].tolist() if np.any(self.magnitude >= PHASE_FLOOR) else None,
            "speed": speed(self).tolist() if len(self.J) > 1 else [],
            "meta": self.meta,
        }

    def to_json(self, dest=None, **kw) -> str:
        text = json.dumps(self.to_dict(), **kw)
        if dest is not None:
            Path(dest).write_text(text)
        return text

    @classmethod
    def from_dict(cls, d: dict) -> "SweepResult":
        p = d["params"]
        params = ChainParams(N=p["N"], s=Fraction(p["s"]), B=p["B"], periodic=p.get("periodic", True))
        C = np.array(d["re_C"]) + 1j * np.array(d["im_C"])
        return cls(np.array(d["J"]), C, np.array(d["degenerate"], dtype=bool), params, Circuit.from_dict(d["circuit"]), d.get("meta", {}))

    @classmethod
    def from_json(cls, text: str) -> "SweepResult":
        return cls.from_dict(json.loads(text))


def sweep(
    params: ChainParams,
    circuit: Circuit,
    J_grid,
    *,
    symmetric: bool = True,
    method: str = "auto",
    threads: int | None = None,
) -> SweepResult:
    """Bargmann invariant of the vertex ground states for every J in ``J_grid``.

    ``params.J`` is ignored; ``params.B`` sets the field strength (1 puts the
    field on the Bloch sphere).

    With ``symmetric=True`` each vertex Hamiltonian is compressed onto the
    zero-momentum sector before solving. In the x-eigenbasis, after a
    site-uniform phase change, every vertex Hamiltonian has non-positive
    off-diagonal elements and a connected graph, so its ground state is
    unique and translation invariant. It therefore lies in that sector.
    Overlaps are unchanged because the sector basis is an isometry.
    """
    J_grid = np.asarray(J_grid, dtype=float)
    if J_grid.ndim != 1 or len(J_grid) < 1:
        raise ValueError("J grid must be a non-empty 1-d sequence")
    if len(J_grid) > 1 and np.any(np.diff(J_grid) <= 0):
        raise ValueError("J grid must be strictly increasing")
    terms = chain_terms(params)
    if symmetric:
        terms = terms.project(translation_sector(params.N, params.d))

    def one(J):
        sols = ground_states_on_circuit(params.with_coupling(J), circuit, terms=terms, method=method)
        res = bargmann_invariant([s.vector for s in sols])
        return res.C, any(s.degenerate for s in sols)

    meta = {"symmetric": symmetric, "method": method}

    def collect(results):
        out = []
        try:
            for r in results:
                out.append(r)
        except SweepError as exc:
            done = J_grid[: len(out)]
            exc.partial = SweepResult(done, [o[0] for o in out], [o[1] for o in out], params, circuit, meta) if out else None
            raise
        return out

    threads = threads or os.cpu_count() or 1
    if threads > 1 and len(J_grid) > 1:
        with ThreadPoolExecutor(threads) as pool:
            out = collect(pool.map(one, J_grid))
    else:
        out = collect(one(J) for J in J_grid)
    return SweepResult(J_grid, [o[0] for o in out], [o[1] for o in out], params, circuit, meta)


def _unpack(obj, C=None):
    if isinstance(obj, SweepResult):
        return obj.J, obj.C
    return np.asarray(obj, dtype=float), np.asarray(C, dtype=complex)


def speed(sweep_or_J, C=None) -> np.ndarray:
    """``|C_{s+1} - C_s| / (J_{s+1} - J_s)`` for consecutive samples."""
    J, C = _unpack(sweep_or_J, C)
    if len(J) < 2:
        raise ValueError("speed needs at least two samples")
    return np.abs(np.diff(C)) / np.diff(J)


def join_phase(phases, jump_threshold: float = np.pi / 2, *, magnitudes=None, floor: float = PHASE_FLOOR):
    """Remove discontinuities from a phase curve by joining pieces end to end.

    Wherever consecutive usable phases differ by more than ``jump_threshold``
    the whole jump is subtracted from every later sample. Samples with
    ``|C| < floor`` carry no reliable phase; they are dropped and refilled by
    linear interpolation of the joined curve. Accepts a :class:`SweepResult`
    or a plain phase sequence.

    Returns
    -------
    joined : ndarray
    extent : float
        ``max - min`` of the joined curve.
    """
    if isinstance(phases, SweepResult):
        magnitudes = phases.magnitude
        phases = phases.phase
    phases = np.asarray(phases, dtype=float)
    keep = np.ones(len(phases), bool) if magnitudes is None else np.asarray(magnitudes) >= floor
    idx = np.flatnonzero(keep)
    if len(idx) == 0:
        raise ValueError("no samples with a usable phase")
    p = phases[idx]
    d = np.diff(p)
    jumps = np.where(np.abs(d) > jump_threshold, d, 0.0)
    joined_kept = p - np.concatenate([[0.0], np.cumsum(jumps)])
    joined = np.interp(np.arange(len(phases)), idx, joined_kept)
    return joined, float(joined.max() - joined.min())


def dip_width(J, magnitude) -> float:
    """Full width at half depth of the dip around the minimum of ``magnitude``.

    The reference level is the mean of the two end samples; crossings of the
    half-depth level are located by linear interpolation. Returns ``inf``
    when the minimum sits on the grid edge or the dip does not climb back
    above half depth inside the grid.
    """
    J = np.asarray(J, float)
    a = np.asarray(magnitude, float)
    i = int(np.argmin(a))
    if i == 0 or i == len(a) - 1:
        return float("inf")
    half = a[i] + (0.5 * (a[0] + a[-1]) - a[i]) / 2
    lo = i
    while lo > 0 and a[lo] < half:
        lo -= 1
    hi = i
    while hi < len(a) - 1 and a[hi] < half:
        hi += 1
    if a[lo] < half or a[hi] < half:
        return float("inf")

    def cross(j, k):
        return J[j] + (half - a[j]) * (J[k] - J[j]) / (a[k] - a[j])

    return float(cross(hi - 1, hi) - cross(lo, lo + 1))
