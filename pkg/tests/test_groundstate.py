import numpy as np
import pytest
import scipy.sparse as sp

from bargmann_chain.groundstate import (
    ConvergenceError,
    dense_spectrum,
    ground_state,
    lanczos_lowest,
    operator_norm1,
)
from bargmann_chain.spin_ops import ChainParams, build_hamiltonian, build_hx, local_operators

from .conftest import random_unit


def test_diagonal_example():
    g = ground_state(np.diag([-1.0, 0.0, 3.0]))
    assert g.energy == pytest.approx(-1)
    assert np.allclose(g.vector, [1, 0, 0])
    assert g.gap == pytest.approx(1)
    assert not g.degenerate


def test_degenerate_odd_ring():
    g = ground_state(build_hx(ChainParams(3, J=1.0, B=1.0)))
    assert g.energy == pytest.approx(-2, abs=1e-12)
    assert g.gap < 1e-10 and g.degenerate


@pytest.mark.parametrize("method", ["dense", "lanczos"])
def test_field_along_z_matches_dense(method):
    H = build_hamiltonian(ChainParams(4, J=0.3, B=1.0), (0, 0, 1))
    g = ground_state(H, method=method)
    assert abs(g.energy - dense_spectrum(H)[0]) < 1e-10


def test_dense_spectrum_examples():
    assert np.allclose(dense_spectrum(local_operators("1/2").x), [-1, 1])
    w = dense_spectrum(build_hx(ChainParams(4, J=1.0, B=1.0)))
    assert np.allclose(w[:2], -4) and w[2] > -4 + 1e-6
    w = dense_spectrum(build_hx(ChainParams(5, J=1.0, B=1.0)))
    assert np.allclose(w[:5], -4) and w[5] > -4 + 1e-6


def test_dense_spectrum_cap():
    with pytest.raises(ValueError):
        dense_spectrum(sp.identity(4097, format="csr"))


def test_dense_spectrum_vectors():
    H = build_hamiltonian(ChainParams(3, J=0.4), (0.6, 0, 0.8)).toarray()
    w, V = dense_spectrum(H, vectors=True)
    assert np.allclose(H @ V, V * w)


@pytest.mark.parametrize("N", range(2, 9))
@pytest.mark.parametrize("method", ["auto", "lanczos"])
def test_random_chains_match_dense(N, method, rng):
    for _ in range(2):
        p = ChainParams(N, J=rng.uniform(-1.5, 1.5), B=rng.uniform(-1.5, 1.5))
        H = build_hamiltonian(p, random_unit(rng))
        g = ground_state(H, method=method)
        assert abs(g.energy - dense_spectrum(H)[0]) < 1e-10
        assert abs(np.linalg.norm(g.vector) - 1) < 1e-12
        assert g.residual <= 1e-10 * max(1.0, operator_norm1(H))
        assert g.gap >= 0


def test_lanczos_matches_dense_above_cutoff():
    p = ChainParams(10, J=0.45, B=1.0)
    H = build_hamiltonian(p, (0.2, 0.6, np.sqrt(1 - 0.4)))
    a = ground_state(H, method="lanczos")
    b = ground_state(H, method="dense")
    assert a.method == "lanczos"
    assert abs(a.energy - b.energy) < 1e-10
    assert abs(a.gap - b.gap) < 1e-8
    assert abs(abs(np.vdot(a.vector, b.vector)) - 1) < 1e-8


def test_variational_bound(rng):
    H = build_hamiltonian(ChainParams(6, J=0.7), random_unit(rng))
    e0 = ground_state(H).energy
    u = rng.standard_normal((100, 64)) + 1j * rng.standard_normal((100, 64))
    u /= np.linalg.norm(u, axis=1, keepdims=True)
    vals = np.real(np.einsum("ki,ij,kj->k", u.conj(), H.toarray(), u))
    assert vals.min() >= e0 - 1e-10


@pytest.mark.parametrize("method", ["dense", "lanczos"])
def test_bitwise_determinism(method):
    H = build_hamiltonian(ChainParams(7, J=0.5), (0.0, 0.6, 0.8))
    a, b = ground_state(H, method=method), ground_state(H, method=method)
    assert np.array_equal(a.vector, b.vector) and a.energy == b.energy


def test_gauge_fixed_vector():
    v = ground_state(build_hamiltonian(ChainParams(3, J=0.2), (0.0, 0.6, 0.8))).vector
    k = np.argmax(np.abs(v))
    assert v[k].imag == 0 and v[k].real > 0


def test_nonconvergence_reports_residual():
    H = build_hamiltonian(ChainParams(8, J=0.5), (0.0, 0.6, 0.8))
    with pytest.raises(ConvergenceError) as info:
        lanczos_lowest(H, max_krylov=3, max_restarts=0)
    assert info.value.residual > 0


def test_deflation_gives_second_level():
    w = np.array([-2.0, -1.0, 0.5, 4.0])
    e, _, _ = lanczos_lowest(np.diag(w), deflate=np.eye(4)[:, :1])
    assert e == pytest.approx(-1)


def test_bad_inputs():
    with pytest.raises(ValueError):
        ground_state(np.eye(1))
    with pytest.raises(ValueError):
        ground_state(np.eye(3), method="magic")
