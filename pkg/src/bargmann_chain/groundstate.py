"""Lowest eigenpair and spectral gap of Hermitian operators.

Small problems go to LAPACK. Larger ones use a Lanczos iteration with full
reorthogonalisation, explicit restarts from the current Ritz vector, and a
second deflated run for the first excited level.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg as sl
import scipy.sparse as sp

__all__ = [
    "GroundSolution",
    "ConvergenceError",
    "ground_state",
    "dense_spectrum",
    "lanczos_lowest",
    "operator_norm1",
    "DENSE_MAX_DIM",
    "START_SEED",
]

DENSE_MAX_DIM = 512
DENSE_SPECTRUM_CAP = 4096
#: seed of the PCG64 generator that draws the Lanczos start vector
START_SEED = 20061231
RESIDUAL_RTOL = 1e-10
DEGENERACY_RTOL = 1e-8


class ConvergenceError(RuntimeError):
    """Raised when the iterative solver misses its residual target."""

    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (best residual {residual:.3e})")
        self.residual = residual


@dataclass(frozen=True)
class GroundSolution:
    energy: float
    vector: np.ndarray
    gap: float
    residual: float
    degenerate: bool = False
    method: str = "dense"


def operator_norm1(H) -> float:
    """Maximum absolute column sum."""
    if sp.issparse(H):
        return float(abs(H).sum(axis=0).max()) if H.nnz else 0.0
    return float(np.abs(H).sum(axis=0).max())


def _fix_gauge(v: np.ndarray) -> np.ndarray:
    # largest component (first on ties) made real positive
    a = np.abs(v)
    k = int(np.argmax(a >= a.max() * (1 - 1e-9)))
    out = v * (np.conj(v[k]) / a[k])
    out[k] = a[k]
    return out


def _as_dense(H) -> np.ndarray:
    return H.toarray() if sp.issparse(H) else np.asarray(H)


def dense_spectrum(H, *, vectors: bool = False):
    """Full ascending spectrum by dense diagonalisation.

    Refuses dimensions above 4096. With ``vectors=True`` returns
    ``(values, vectors)`` with eigenvectors as columns.
    """
    n = H.shape[0]
    if n > DENSE_SPECTRUM_CAP:
        raise ValueError(f"dimension {n} exceeds the dense cap {DENSE_SPECTRUM_CAP}")
    A = _as_dense(H)
    if vectors:
        return sl.eigh(A)
    return sl.eigh(A, eigvals_only=True)


def _start_vector(n: int) -> np.ndarray:
    rng = np.random.Generator(np.random.PCG64(START_SEED))
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return v / np.linalg.norm(v)


def lanczos_lowest(
    H,
    *,
    v0: np.ndarray | None = None,
    deflate: np.ndarray | None = None,
    tol: float | None = None,
    max_krylov: int = 300,
    max_restarts: int = 50,
    check_every: int = 8,
):
    """Lowest Ritz pair of ``H`` by restarted Lanczos with full reorthogonalisation.

    Parameters
    ----------
    H : sparse matrix, ndarray or LinearOperator
        Hermitian operator supporting ``H @ v``.
    v0 : ndarray, optional
        Start vector; the seeded default is used when omitted.
    deflate : ndarray, optional
        Orthonormal columns to keep the Krylov space orthogonal to. The
        result is then the lowest eigenpair of ``H`` restricted to their
        orthogonal complement.
    tol : float, optional
        Absolute residual target ``||H v - E v||``. Defaults to
        ``1e-10 * max(1, ||H||_1)``.

    Returns
    -------
    energy, vector, residual
    """
    n = H.shape[0]
    if tol is None:
        explicit = sp.issparse(H) or isinstance(H, np.ndarray)
        tol = RESIDUAL_RTOL * max(1.0, operator_norm1(H) if explicit else 1.0)
    D = None if deflate is None else np.asarray(deflate).reshape(n, -1)
    n_free = n - (0 if D is None else D.shape[1])
    if n_free <= 0:
        raise ValueError("nothing left after deflation")

    def orth(w, Q=None):
        for _ in range(2):
            if D is not None:
                w = w - D @ (D.conj().T @ w)
            if Q is not None and Q.shape[1]:
                w = w - Q @ (Q.conj().T @ w)
        return w

    v = _start_vector(n) if v0 is None else np.asarray(v0, dtype=complex).copy()
    best = np.inf
    m_cap = min(max_krylov, n_free)
    for _ in range(max_restarts + 1):
        v = orth(v)
        nv = np.linalg.norm(v)
        if nv == 0.0:
            raise ConvergenceError("start vector lies in the deflated space", best)
        Q = np.zeros((n, m_cap), dtype=complex)
        alpha = np.zeros(m_cap)
        beta = np.zeros(m_cap)
        Q[:, 0] = v / nv
        m = 0
        while True:
            w = H @ Q[:, m]
            alpha[m] = np.real(np.vdot(Q[:, m], w))
            w = orth(w, Q[:, : m + 1])
            beta[m] = np.linalg.norm(w)
            m += 1
            done = m == m_cap or beta[m - 1] <= 1e-14 * max(1.0, abs(alpha[: m]).max())
            if done or m % check_every == 0:
                if m == 1:
                    theta, S = alpha[:1], np.ones((1, 1))
                else:
                    theta, S = sl.eigh_tridiagonal(alpha[:m], beta[: m - 1], select="i", select_range=(0, 0))
                est = abs(beta[m - 1] * S[-1, 0])
                if est <= tol or done:
                    x = Q[:, :m] @ S[:, 0]
                    x /= np.linalg.norm(x)
                    e = float(theta[0])
                    res = float(np.linalg.norm(orth(H @ x) - e * x)) if D is not None else float(np.linalg.norm(H @ x - e * x))
                    best = min(best, res)
                    if res <= tol:
                        return e, x, res
                    v = x
                    break
            if not done:
                Q[:, m] = w / beta[m - 1]
    raise ConvergenceError(f"Lanczos did not converge after {max_restarts} restarts", best)


def ground_state(H, *, method: str = "auto", tol: float | None = None) -> GroundSolution:
    """Lowest eigenpair of a Hermitian operator and the gap above it.

    ``method`` is ``"dense"``, ``"lanczos"`` or ``"auto"`` (dense up to
    dimension 512). The returned vector is normalised and its largest
    component is real and positive, so repeated calls give identical
    arrays. ``degenerate`` is set when the gap is below ``1e-8 * ||H||_1``.
    """
    n = H.shape[0]
    if n < 2 or H.shape != (n, n):
        raise ValueError(f"need a square operator of dimension >= 2, got {H.shape}")
    norm = operator_norm1(H)
    if tol is None:
        tol = RESIDUAL_RTOL * max(1.0, norm)
    if method == "auto":
        method = "dense" if n <= DENSE_MAX_DIM else "lanczos"
    if method == "dense":
        w, V = sl.eigh(_as_dense(H), subset_by_index=[0, 1])
        e0, e1 = float(w[0]), float(w[1])
        x = V[:, 0]
        res = float(np.linalg.norm(H @ x - e0 * x))
    elif method == "lanczos":
        e0, x, res = lanczos_lowest(H, tol=tol)
        e1, _, _ = lanczos_lowest(H, deflate=x, tol=tol)
    else:
        raise ValueError(f"unknown method {method!r}")
    x = _fix_gauge(x / np.linalg.norm(x))
    gap = max(e1 - e0, 0.0)
    return GroundSolution(e0, x, gap, res, gap < DEGENERACY_RTOL * norm, method)
