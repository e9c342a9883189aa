"""Dense complex matrix helpers and the Hermitian spectral engine.

Everything downstream (partial transposes, PPT tests, witness searches)
runs through this module, so the conventions are fixed here once:
matrices are square ``complex128`` ndarrays, eigenvalues come back
ascending, and Hermiticity is enforced to ``HERMITICITY_TOL`` in max-abs
before any spectral work.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

HERMITICITY_TOL = 1e-10


class DimensionMismatch(ValueError):
    """Operands do not have compatible dimensions."""


class NotHermitian(ValueError):
    """Matrix fails the Hermitian symmetry tolerance."""


class NoConvergence(RuntimeError):
    """The eigensolver failed to converge."""


def as_complex_matrix(a) -> np.ndarray:
    """Coerce to a square complex128 matrix with finite entries."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_complex_matrix(a).conj().T


def trace(a) -> complex:
    return complex(np.trace(as_complex_matrix(a)))


def frob_norm(a) -> float:
    return float(np.linalg.norm(as_complex_matrix(a)))


def matmul(a, b) -> np.ndarray:
    a = as_complex_matrix(a)
    b = as_complex_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def as_hermitian(a, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Validate Hermiticity to `tol` (max-abs) and return the symmetrized matrix.

    Symmetrizing (H + H†)/2 after the check kills the round-off drift that
    partial transposition of a valid density matrix introduces.
    """
    m = as_complex_matrix(a)
    dev = float(np.max(np.abs(m - m.conj().T)))
    if dev > tol:
        raise NotHermitian(f"max |H - H†| = {dev:.3e} exceeds tolerance {tol:.1e}")
    return (m + m.conj().T) / 2


@dataclass(frozen=True, eq=False)
class HermitianEigen:
    """Spectral decomposition H = V diag(w) V† with w ascending."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def hermitian_eigen(h, tol: float = HERMITICITY_TOL) -> HermitianEigen:
    """Eigendecompose a Hermitian matrix.

    Eigenvalues are returned ascending, eigenvectors as the columns of a
    unitary matrix.  Raises NotHermitian if the symmetry check fails and
    NoConvergence if the underlying iteration gives up.
    """
    m = as_hermitian(h, tol=tol)
    try:
        w, v = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK rarely fails
        raise NoConvergence(str(exc)) from exc
    return HermitianEigen(eigenvalues=w, eigenvectors=v)


def hs_distance(a, b) -> float:
    """Euclidean (Hilbert-Schmidt) distance sqrt(Tr (A-B)^2) between Hermitian matrices."""
    ah = as_hermitian(a)
    bh = as_hermitian(b)
    if ah.shape != bh.shape:
        raise DimensionMismatch(f"dimension mismatch: {ah.shape} vs {bh.shape}")
    return float(np.linalg.norm(ah - bh))


class PsdCheck(NamedTuple):
    psd: bool
    min_eigenvalue: float


def is_psd(h, tol: float = 1e-9) -> PsdCheck:
    """Positive-semidefiniteness test: psd iff the smallest eigenvalue >= -tol."""
    eig = hermitian_eigen(h)
    lo = float(eig.eigenvalues[0])
    return PsdCheck(psd=lo >= -tol, min_eigenvalue=lo)
