import numpy as np
import pytest


def random_hermitian(rng, dim, scale=1.0):
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return scale * (g + g.conj().T) / 2


def reference_partial_transpose(mat, m, n):
    """Index-by-index partial transpose, independent of the library's reshape route.

    out[(i,k),(j,l)] = in[(i,l),(j,k)] with composite index (i,k) -> i*n + k.
    """
    out = np.zeros_like(mat)
    for i in range(m):
        for j in range(m):
            for k in range(n):
                for l in range(n):
                    out[i * n + k, j * n + l] = mat[i * n + l, j * n + k]
    return out


def werner_min_pt_oracle(d, p):
    """Closed-form minimum PT eigenvalue of the d x d Werner family."""
    return (1 - p) / (d * d) - p / d


def reduced_a_eigenvalues(amplitudes, m, n):
    """Eigenvalues of the A-side reduced density matrix, by explicit index sums."""
    rho = np.outer(amplitudes, amplitudes.conj())
    red = np.zeros((m, m), dtype=np.complex128)
    for i in range(m):
        for j in range(m):
            for k in range(n):
                red[i, j] += rho[i * n + k, j * n + k]
    return np.linalg.eigvalsh(red)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
