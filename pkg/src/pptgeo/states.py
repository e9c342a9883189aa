"""Density-matrix construction, validation, and seeded random sampling.

Sampling follows the Hilbert-Schmidt (Ginibre) measure: rho = G G† / Tr(G G†)
with G a square matrix of independent standard complex Gaussians.  Streams are
reproducible: PCG64 supplies uniforms and Gaussians come from a vectorized
Box-Muller transform, so a seed pins the output bit-for-bit.  The generator
identity string is recorded in every report header.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import DimensionMismatch, as_hermitian

GENERATOR_ID = "pcg64+box-muller"

DENSITY_HERM_TOL = 1e-10
DENSITY_TRACE_TOL = 1e-10
DENSITY_PSD_TOL = 1e-9
PURE_NORM_TOL = 1e-12

DEFAULT_MAX_REJECTS = 10_000


class NotNormalized(ValueError):
    """Pure-state amplitudes are not unit norm."""


class ShellUnreachable(RuntimeError):
    """Rejection sampling failed to land a PSD matrix on the requested shell."""


def standard_normals(rng: np.random.Generator, n: int) -> np.ndarray:
    """n standard normals via Box-Muller on PCG64 uniforms."""
    pairs = (n + 1) // 2
    # 1 - random() lies in (0, 1], keeping the log finite.
    u1 = 1.0 - rng.random(pairs)
    u2 = rng.random(pairs)
    radius = np.sqrt(-2.0 * np.log(u1))
    angle = 2.0 * np.pi * u2
    return np.concatenate([radius * np.cos(angle), radius * np.sin(angle)])[:n]


def complex_ginibre(rng: np.random.Generator, n: int) -> np.ndarray:
    """n x n matrix of independent standard complex Gaussians."""
    g = standard_normals(rng, 2 * n * n)
    return (g[: n * n] + 1j * g[n * n :]).reshape(n, n)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Unit-trace positive-semidefinite Hermitian matrix.

    Invariants are checked on construction: Hermitian to 1e-10 max-abs,
    trace 1 to 1e-10, smallest eigenvalue >= -1e-9.  The stored matrix is
    symmetrized after the Hermiticity check.
    """

    dim: int
    matrix: np.ndarray

    def __post_init__(self):
        m = as_hermitian(self.matrix, tol=DENSITY_HERM_TOL)
        if m.shape != (self.dim, self.dim):
            raise DimensionMismatch(f"matrix shape {m.shape} does not match dim {self.dim}")
        tr = float(np.trace(m).real)
        if abs(tr - 1.0) > DENSITY_TRACE_TOL:
            raise ValueError(f"trace {tr!r} is not 1 within {DENSITY_TRACE_TOL:.1e}")
        lo = float(np.linalg.eigvalsh(m)[0])
        if lo < -DENSITY_PSD_TOL:
            raise ValueError(f"smallest eigenvalue {lo:.3e} below -{DENSITY_PSD_TOL:.1e}")
        object.__setattr__(self, "matrix", m)

    def purity(self) -> float:
        return float(np.trace(self.matrix @ self.matrix).real)


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized state vector."""

    dim: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=np.complex128)
        if amp.shape != (self.dim,):
            raise DimensionMismatch(f"amplitude shape {amp.shape} does not match dim {self.dim}")
        norm = float(np.linalg.norm(amp))
        if abs(norm - 1.0) > PURE_NORM_TOL:
            raise NotNormalized(f"norm {norm!r} is not 1 within {PURE_NORM_TOL:.1e}")
        object.__setattr__(self, "amplitudes", amp)


@dataclass(frozen=True)
class WernerParams:
    """Werner family parameters: local dimension d >= 2, mixing p in [0, 1]."""

    local_dim: int
    mixing: float

    def __post_init__(self):
        if self.local_dim < 2:
            raise ValueError(f"local_dim must be >= 2, got {self.local_dim}")
        if not 0.0 <= self.mixing <= 1.0:
            raise ValueError(f"mixing must lie in [0, 1], got {self.mixing}")


def maximally_mixed(dim: int) -> DensityMatrix:
    """Identity / N, the center of the state-space ball."""
    if dim < 2:
        raise ValueError(f"dim must be >= 2, got {dim}")
    return DensityMatrix(dim=dim, matrix=np.eye(dim, dtype=np.complex128) / dim)


def pure_density(psi: PureState) -> DensityMatrix:
    """Rank-1 projector |psi><psi|."""
    amp = psi.amplitudes
    return DensityMatrix(dim=psi.dim, matrix=np.outer(amp, amp.conj()))


def max_entangled(local_dim: int) -> PureState:
    """Maximally entangled state (1/sqrt(d)) sum_i |ii> on d x d.

    Composite index convention is A-major: (i, k) -> i*d + k.
    """
    d = local_dim
    amp = np.zeros(d * d, dtype=np.complex128)
    amp[:: d + 1] = 1.0 / np.sqrt(d)
    return PureState(dim=d * d, amplitudes=amp)


def werner(params: WernerParams) -> DensityMatrix:
    """Werner family p |Phi><Phi| + (1-p) I/d^2.

    The pure component is pinned to the maximally entangled state, the
    extremal case for partial-transpose negativity; this is what makes the
    d=2 threshold p = 1/3 come out exactly.
    """
    d = params.local_dim
    p = params.mixing
    proj = pure_density(max_entangled(d)).matrix
    eye = np.eye(d * d, dtype=np.complex128) / (d * d)
    return DensityMatrix(dim=d * d, matrix=p * proj + (1.0 - p) * eye)


def convex_mix(p: float, a: DensityMatrix, b: DensityMatrix) -> DensityMatrix:
    """Convex combination p*a + (1-p)*b."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimension mismatch: {a.dim} vs {b.dim}")
    return DensityMatrix(dim=a.dim, matrix=p * a.matrix + (1.0 - p) * b.matrix)


def sample_hs(rng: np.random.Generator, dim: int) -> DensityMatrix:
    """One Hilbert-Schmidt random state from an existing generator stream."""
    g = complex_ginibre(rng, dim)
    w = g @ g.conj().T
    return DensityMatrix(dim=dim, matrix=w / np.trace(w).real)


def sample_hs_random(dim: int, seed: int) -> DensityMatrix:
    """Seeded Hilbert-Schmidt random state rho = G G† / Tr(G G†)."""
    if dim < 2:
        raise ValueError(f"dim must be >= 2, got {dim}")
    return sample_hs(np.random.default_rng(seed), dim)


def shell_attempt(rng: np.random.Generator, dim: int, radius: float,
                  psd_tol: float = 1e-12) -> DensityMatrix | None:
    """One attempt at a state on the shell of HS radius `radius` around I/N.

    Draws an HS-random state, rescales its traceless part to the target
    norm, and returns None when the result leaves the PSD cone.
    """
    eye = np.eye(dim, dtype=np.complex128) / dim
    rho0 = sample_hs(rng, dim)
    delta = rho0.matrix - eye
    scale = radius / float(np.linalg.norm(delta))
    candidate = eye + scale * delta
    if float(np.linalg.eigvalsh(candidate)[0]) < -psd_tol:
        return None
    return DensityMatrix(dim=dim, matrix=candidate)


def sample_on_shell(dim: int, radius: float, seed: int,
                    max_rejects: int = DEFAULT_MAX_REJECTS) -> DensityMatrix:
    """Seeded state at HS distance `radius` (to 1e-12) from I/N.

    Raises ShellUnreachable after `max_rejects` failed attempts; shells near
    the outer radius sqrt((N-1)/N) are overwhelmingly non-PSD, so failing
    loudly beats spinning.
    """
    outer = np.sqrt((dim - 1) / dim)
    if not 0.0 < radius < outer:
        raise ValueError(f"radius must lie in (0, {outer:.6f}), got {radius}")
    rng = np.random.default_rng(seed)
    for _ in range(max_rejects):
        state = shell_attempt(rng, dim, radius)
        if state is not None:
            return state
    raise ShellUnreachable(
        f"no PSD state found on shell r={radius} for N={dim} after {max_rejects} attempts"
    )
