import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pptgeo.linalg import (
    DimensionMismatch,
    NotHermitian,
    adjoint,
    as_hermitian,
    frob_norm,
    hermitian_eigen,
    hs_distance,
    is_psd,
    matmul,
    trace,
)
from pptgeo.states import WernerParams, maximally_mixed, werner

from conftest import random_hermitian


# --- hermitian_eigen ---------------------------------------------------------

def test_eigen_identity():
    eig = hermitian_eigen(np.eye(3))
    np.testing.assert_allclose(eig.eigenvalues, [1.0, 1.0, 1.0], atol=1e-14)


def test_eigen_diagonal_sorted_ascending():
    eig = hermitian_eigen(np.diag([3.0, 1.0, 2.0]))
    np.testing.assert_allclose(eig.eigenvalues, [1.0, 2.0, 3.0], atol=1e-14)


def test_eigen_pauli_x():
    eig = hermitian_eigen(np.array([[0.0, 1.0], [1.0, 0.0]]))
    np.testing.assert_allclose(eig.eigenvalues, [-1.0, 1.0], atol=1e-14)


def test_eigen_rejects_non_hermitian():
    with pytest.raises(NotHermitian):
        hermitian_eigen(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_eigen_reconstruction_and_unitarity(rng):
    # 200 seeded random Hermitian matrices, dims up to 16
    for trial in range(200):
        dim = int(rng.integers(2, 17))
        h = random_hermitian(rng, dim, scale=float(rng.uniform(0.1, 10.0)))
        eig = hermitian_eigen(h)
        v, w = eig.eigenvectors, eig.eigenvalues
        assert np.all(np.diff(w) >= 0)
        unit_dev = np.max(np.abs(v.conj().T @ v - np.eye(dim)))
        assert unit_dev <= 1e-10
        resid = np.linalg.norm(h - (v * w) @ v.conj().T)
        assert resid <= 1e-9 * max(1.0, np.linalg.norm(h))


# --- hs_distance -------------------------------------------------------------

def test_distance_zero_on_equal():
    h = np.diag([0.25, 0.75])
    assert hs_distance(h, h) == 0.0


def test_distance_orthogonal_projectors():
    assert hs_distance(np.diag([1.0, 0.0]), np.diag([0.0, 1.0])) == pytest.approx(
        np.sqrt(2), abs=1e-15
    )


@pytest.mark.parametrize("p", [0.2, 0.5, 1.0])
def test_distance_of_werner_to_center(p):
    # D(rho_w(d=2, p), I/4) = p sqrt(3/4)
    w = werner(WernerParams(2, p))
    d = hs_distance(w.matrix, maximally_mixed(4).matrix)
    assert d == pytest.approx(p * np.sqrt(3 / 4), abs=1e-14)


def test_distance_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        hs_distance(np.eye(2), np.eye(3))


def test_distance_triangle_inequality(rng):
    for _ in range(100):
        dim = int(rng.integers(2, 9))
        a = random_hermitian(rng, dim)
        b = random_hermitian(rng, dim)
        c = random_hermitian(rng, dim)
        assert hs_distance(a, c) <= hs_distance(a, b) + hs_distance(b, c) + 1e-12


def test_distance_squared_trace_expansion(rng):
    # D(A,B)^2 = Tr A^2 - 2 Tr AB + Tr B^2
    for _ in range(50):
        dim = int(rng.integers(2, 9))
        a = random_hermitian(rng, dim)
        b = random_hermitian(rng, dim)
        lhs = hs_distance(a, b) ** 2
        rhs = (trace(a @ a) - 2 * trace(a @ b) + trace(b @ b)).real
        assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-12)


def test_distance_symmetry(rng):
    a = random_hermitian(rng, 5)
    b = random_hermitian(rng, 5)
    assert hs_distance(a, b) == hs_distance(b, a)


# --- small algebra -----------------------------------------------------------

def test_trace_identity():
    assert trace(np.eye(4)) == 4.0


def test_frob_norm_of_normalized_identity():
    for dim in (2, 3, 7):
        assert frob_norm(np.eye(dim) / dim) == pytest.approx(1 / np.sqrt(dim), abs=1e-15)


@given(seed=st.integers(0, 2**32 - 1))
@settings(max_examples=25, deadline=None)
def test_adjoint_is_involution(seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    np.testing.assert_array_equal(adjoint(adjoint(a)), a)


def test_matmul_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        matmul(np.eye(2), np.eye(3))


def test_as_hermitian_symmetrizes_roundoff():
    h = np.array([[1.0, 0.5 + 1e-12j], [0.5 - 2e-12j, 2.0]])
    out = as_hermitian(h)
    np.testing.assert_array_equal(out, out.conj().T)


# --- is_psd ------------------------------------------------------------------

def test_is_psd_mixed_qubit():
    check = is_psd(np.eye(2) / 2)
    assert check.psd
    assert check.min_eigenvalue == pytest.approx(0.5, abs=1e-15)


def test_is_psd_indefinite_diagonal():
    check = is_psd(np.diag([1.0, -0.1]), tol=1e-9)
    assert not check.psd
    assert check.min_eigenvalue == pytest.approx(-0.1, abs=1e-15)


def test_is_psd_partial_transpose_of_bell():
    # Explicit 4x4 partial transpose of the Bell projector; spectrum
    # {1/2, 1/2, 1/2, -1/2} is analytic.
    bell = np.array([1, 0, 0, 1]) / np.sqrt(2)
    rho = np.outer(bell, bell)
    pt = np.zeros((4, 4))
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    pt[i * 2 + k, j * 2 + l] = rho[i * 2 + l, j * 2 + k]
    check = is_psd(pt, tol=1e-9)
    assert not check.psd
    assert check.min_eigenvalue == pytest.approx(-0.5, abs=1e-12)
