"""Spin operators and sparse many-body Hamiltonians for a periodic chain.

The chain Hamiltonian is

    H(n) = J * sum_k L^x_k L^x_{k+1} + B * sum_k (n . L)_k,

with site N+1 identified with site 1. ``L`` are Pauli matrices for spin 1/2
and the standard spin-1 matrices (eigenvalues -1, 0, +1) for spin 1. Site 1
is the most significant tensor factor and the local basis diagonalises
``L^z`` with eigenvalues in descending order.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache

import numpy as np
import scipy.sparse as sp

__all__ = [
    "ChainParams",
    "LocalOperators",
    "ChainTerms",
    "parse_spin",
    "local_operators",
    "site_operator",
    "chain_terms",
    "build_hamiltonian",
    "build_hx",
    "translation_sector",
    "check_unit_vector",
]

UNIT_TOL = 1e-12


def parse_spin(s) -> Fraction:
    """Normalise a spin value given as ``"1/2"``, ``0.5``, ``1`` or a Fraction."""
    try:
        value = Fraction(s)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ValueError(f"unsupported spin value {s!r}; expected 1/2 or 1") from None
    if value not in (Fraction(1, 2), Fraction(1)):
        raise ValueError(f"unsupported spin value {s!r}; expected 1/2 or 1")
    return value


@dataclass(frozen=True)
class ChainParams:
    """Chain length, spin, coupling and field of a periodic chain.

    ``N = 1`` is accepted so the single-spin Berry limit can be run through
    the same code; the coupling term then reduces to ``J * (L^x)^2``.
    """

    N: int
    s: Fraction = Fraction(1, 2)
    J: float = 0.0
    B: float = 1.0
    periodic: bool = True

    def __post_init__(self):
        object.__setattr__(self, "s", parse_spin(self.s))
        if int(self.N) != self.N or self.N < 1:
            raise ValueError(f"chain length must be a positive integer, got {self.N!r}")
        object.__setattr__(self, "N", int(self.N))
        if not self.periodic:
            raise ValueError("only periodic boundary conditions are supported")
        if not (np.isfinite(self.J) and np.isfinite(self.B)):
            raise ValueError("J and B must be finite")

    @property
    def d(self) -> int:
        return int(2 * self.s + 1)

    @property
    def dim(self) -> int:
        return self.d**self.N

    def with_coupling(self, J: float) -> "ChainParams":
        return replace(self, J=float(J))


@dataclass(frozen=True)
class LocalOperators:
    x: np.ndarray
    y: np.ndarray
    z: np.ndarray

    def __iter__(self):
        return iter((self.x, self.y, self.z))


@lru_cache(maxsize=None)
def _local(s: Fraction) -> LocalOperators:
    if s == Fraction(1, 2):
        x = np.array([[0, 1], [1, 0]], dtype=complex)
        y = np.array([[0, -1j], [1j, 0]], dtype=complex)
        z = np.array([[1, 0], [0, -1]], dtype=complex)
    else:
        c = 1 / np.sqrt(2)
        x = c * np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=complex)
        y = c * np.array([[0, -1j, 0], [1j, 0, -1j], [0, 1j, 0]], dtype=complex)
        z = np.diag([1.0, 0.0, -1.0]).astype(complex)
    for m in (x, y, z):
        m.setflags(write=False)
    return LocalOperators(x, y, z)


def local_operators(s) -> LocalOperators:
    """Return the single-site operators ``(L^x, L^y, L^z)`` for spin ``s``."""
    return _local(parse_spin(s))


def site_operator(op, k: int, params: ChainParams) -> sp.csr_matrix:
    """Embed a single-site operator at site ``k`` (1-based) of the chain.

    Returns ``I^(k-1) (x) op (x) I^(N-k)`` as a CSR matrix.
    """
    op = np.asarray(op)
    d = params.d
    if op.shape != (d, d):
        raise ValueError(f"operator shape {op.shape} does not match local dimension {d}")
    if not 1 <= k <= params.N:
        raise IndexError(f"site index {k} out of range 1..{params.N}")
    left = sp.identity(d ** (k - 1), dtype=complex, format="csr")
    right = sp.identity(d ** (params.N - k), dtype=complex, format="csr")
    m = sp.kron(sp.kron(left, sp.csr_matrix(op)), right, format="csr")
    m.eliminate_zeros()
    return m


@dataclass(frozen=True)
class ChainTerms:
    """The four operator pieces H is linear in.

    ``H(J, B, n) = J * coupling + B * (n_x * field[0] + n_y * field[1] + n_z * field[2])``
    """

    coupling: object
    field: tuple

    def combine(self, J: float, B: float, n) -> object:
        nx, ny, nz = n
        return J * self.coupling + B * (
            nx * self.field[0] + ny * self.field[1] + nz * self.field[2]
        )

    def project(self, basis: sp.spmatrix) -> "ChainTerms":
        """Compress every term onto the columns of an isometry (dense result)."""
        bh = basis.conj().T.tocsr()

        def proj(m):
            return np.asarray((bh @ m @ basis).todense())

        return ChainTerms(proj(self.coupling), tuple(proj(f) for f in self.field))


def chain_terms(params: ChainParams) -> ChainTerms:
    """Sparse coupling and field sums for ``params`` (J and B are ignored)."""
    ops = local_operators(params.s)
    sites = [[site_operator(o, k, params) for k in range(1, params.N + 1)] for o in ops]
    xs = sites[0]
    N = params.N
    # literal periodic sum: for N = 2 the bond (1, 2) appears twice
    coupling = sum((xs[k] @ xs[(k + 1) % N] for k in range(N)), sp.csr_matrix((params.dim,) * 2, dtype=complex))
    field = tuple(sum(col[1:], col[0]).tocsr() for col in sites)
    return ChainTerms(coupling.tocsr(), field)


def check_unit_vector(n, tol: float = UNIT_TOL) -> np.ndarray:
    n = np.asarray(n, dtype=float)
    if n.shape != (3,):
        raise ValueError(f"field direction must have 3 components, got shape {n.shape}")
    if abs(np.linalg.norm(n) - 1.0) > tol:
        raise ValueError(f"field direction {n.tolist()} is not a unit vector")
    return n


def build_hamiltonian(params: ChainParams, n) -> sp.csr_matrix:
    """Sparse Hamiltonian for field direction ``n`` (unit vector)."""
    n = check_unit_vector(n)
    H = chain_terms(params).combine(params.J, params.B, n)
    H.eliminate_zeros()
    return H.tocsr()


def build_hx(params: ChainParams) -> sp.csr_matrix:
    """The classical special case with the field along +x."""
    return build_hamiltonian(params, (1.0, 0.0, 0.0))


def translation_sector(N: int, d: int) -> sp.csr_matrix:
    """Isometry onto the zero-momentum (translation-invariant) subspace.

    Column ``j`` is the normalised uniform superposition over one orbit of
    basis states under cyclic site shifts. Columns are ordered by the
    smallest basis index in each orbit.
    """
    D = d**N
    idx = np.arange(D, dtype=np.int64)
    # shifting site 1 to the end: drop the leading digit, append it
    lead = d ** (N - 1)
    orbit_min = idx.copy()
    cur = idx.copy()
    for _ in range(N - 1):
        cur = (cur % lead) * d + cur // lead
        np.minimum(orbit_min, cur, out=orbit_min)
    reps, label = np.unique(orbit_min, return_inverse=True)
    sizes = np.bincount(label)
    vals = 1.0 / np.sqrt(sizes[label])
    return sp.csr_matrix((vals.astype(complex), (idx, label)), shape=(D, len(reps)))
