"""Tensor-structure operations: partial transpose, Schmidt data, PPT tests.

Composite index convention, fixed package-wide: basis state (i, k) of an
m x n split maps to row/column i*n + k (A-major).  The partial transpose
always acts on the second (B) factor; transposing A instead yields the full
transpose of the same matrix and hence the identical spectrum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .linalg import DimensionMismatch, as_hermitian, hermitian_eigen
from .states import DensityMatrix, PureState

RANK_TOL = 1e-10
# The spectral route computes coefficients as sqrt(eig(C C†)), which cannot
# resolve singular values below sqrt(machine eps); eigenvalues under this
# floor are numerical noise and are treated as exact zeros.
EIG_NOISE_FLOOR = 1e-14


class MultiplicityNegative(ValueError):
    """Schmidt rank inconsistent with the split (defensive; unreachable for valid inputs)."""


@dataclass(frozen=True)
class BipartiteSplit:
    """Tensor factorization H = H_m (x) H_n."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 2 or self.n < 2:
            raise ValueError(f"both factors must be >= 2, got {self.m} x {self.n}")

    @property
    def dim(self) -> int:
        return self.m * self.n

    def check_dim(self, dim: int) -> None:
        if self.dim != dim:
            raise DimensionMismatch(
                f"split {self.m}x{self.n} does not factor dimension {dim}"
            )


def _matrix_of(rho) -> np.ndarray:
    return rho.matrix if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=np.complex128)


def partial_transpose(rho, split: BipartiteSplit) -> np.ndarray:
    """Transpose the B indices: out[(i,k),(j,l)] = in[(i,l),(j,k)].

    Accepts a DensityMatrix or a Hermitian matrix; returns a plain Hermitian
    ndarray (the result generally leaves the PSD cone).  Entry permutation
    only, so the trace is preserved exactly.
    """
    mat = _matrix_of(rho)
    split.check_dim(mat.shape[0])
    m, n = split.m, split.n
    return (
        mat.reshape(m, n, m, n)
        .transpose(0, 3, 2, 1)
        .reshape(split.dim, split.dim)
    )


@dataclass(frozen=True, eq=False)
class SchmidtDecomposition:
    """Bi-orthogonal expansion psi = sum_i alpha_i e_i (x) f_i.

    coefficients: all min(m, n) Schmidt coefficients, nonincreasing;
    rank counts those above RANK_TOL; left/right hold the e_i / f_i as
    orthonormal columns.
    """

    coefficients: np.ndarray
    rank: int
    left: np.ndarray
    right: np.ndarray


def schmidt(psi: PureState, split: BipartiteSplit) -> SchmidtDecomposition:
    """Schmidt decomposition via the spectral route.

    Eigendecomposing C C† (m x m, C the reshaped amplitude matrix) gives the
    squared coefficients and left basis; right vectors follow from
    f_i = C† e_i / alpha_i for alpha_i above RANK_TOL, and the degenerate
    remainder is completed orthonormally.  Bases are not unique under
    coefficient degeneracy, so only coefficient multisets and reconstruction
    residuals are contractual.
    """
    split.check_dim(psi.dim)
    m, n = split.m, split.n
    k = min(m, n)
    c = psi.amplitudes.reshape(m, n)

    eig = hermitian_eigen(c @ c.conj().T)
    order = np.argsort(eig.eigenvalues)[::-1][:k]
    weights = np.clip(eig.eigenvalues[order], 0.0, None)
    weights[weights < EIG_NOISE_FLOOR] = 0.0
    alpha = np.sqrt(weights)
    left = eig.eigenvectors[:, order]

    rank = int(np.sum(alpha > RANK_TOL))
    right = np.zeros((n, k), dtype=np.complex128)
    for i in range(rank):
        f = c.conj().T @ left[:, i] / alpha[i]
        right[:, i] = f / np.linalg.norm(f)
    if rank < k:
        # Deterministic orthonormal completion of the right set: eigenvectors
        # of the projector onto the orthocomplement of span(f_1..f_r).
        proj = np.eye(n, dtype=np.complex128) - right[:, :rank] @ right[:, :rank].conj().T
        comp_eig = hermitian_eigen(proj)
        right[:, rank:] = comp_eig.eigenvectors[:, n - (k - rank):]

    return SchmidtDecomposition(coefficients=alpha, rank=rank, left=left, right=right)


def pt_spectrum_analytic(sd: SchmidtDecomposition, split: BipartiteSplit) -> np.ndarray:
    """Closed-form partial-transpose spectrum of a pure state, sorted ascending.

    For Schmidt coefficients alpha_1..alpha_r the PT of |psi><psi| has
    eigenvalues alpha_i^2 (i <= r), +/- alpha_i alpha_j (i < j <= r), and 0
    with multiplicity min(m,n)|m-n| + min(m,n)^2 - r^2.  The multiplicities
    always total m*n; the count is asserted defensively.
    """
    m, n = split.m, split.n
    r = sd.rank
    zero_mult = min(m, n) * abs(m - n) + min(m, n) ** 2 - r * r
    if zero_mult < 0:
        raise MultiplicityNegative(
            f"rank {r} exceeds min({m}, {n}); zero multiplicity would be {zero_mult}"
        )
    alpha = sd.coefficients[:r]
    values = list(alpha**2)
    for i in range(r):
        for j in range(i + 1, r):
            values.append(alpha[i] * alpha[j])
            values.append(-alpha[i] * alpha[j])
    values.extend([0.0] * zero_mult)
    out = np.sort(np.asarray(values, dtype=np.float64))
    assert out.size == m * n
    return out


class PptCheck(NamedTuple):
    ppt: bool
    min_pt_eigenvalue: float


def is_ppt(rho: DensityMatrix, split: BipartiteSplit, tol: float = 1e-9) -> PptCheck:
    """PPT test: positive iff the partial transpose stays in the PSD cone."""
    sigma = as_hermitian(partial_transpose(rho, split))
    lo = float(np.linalg.eigvalsh(sigma)[0])
    return PptCheck(ppt=lo >= -tol, min_pt_eigenvalue=lo)
