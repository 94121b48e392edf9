"""Small dense Hermitian eigenproblems and matrix helpers.

Everything downstream that needs eigenvalues (positivity checks, the
numeric route to the CHSH quantities) goes through ``hermitian_eigenvalues``,
a self-contained cyclic Jacobi solver. Keeping that route independent of the
closed-form expressions elsewhere in the package is the point: the two are
compared against each other in the test suite and inside ``classify``.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

#: Absolute tolerance for accepting a matrix as Hermitian.
HERMITICITY_ATOL = 1e-12

#: Maximum number of cyclic Jacobi sweeps before giving up.
MAX_JACOBI_SWEEPS = 100

SIGMA0 = np.eye(2, dtype=complex)
SIGMA1 = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA2 = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA3 = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


def trace(m: np.ndarray) -> complex:
    """Sum of the diagonal of a square matrix."""
    return complex(np.trace(m))


def adjoint(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(m).conj().T


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product with an explicit shape check."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise ValueError(f"incompatible shapes {a.shape} x {b.shape}")
    return a @ b


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product."""
    return np.kron(a, b)


def _as_hermitian(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if m.size and np.abs(m - m.conj().T).max() > HERMITICITY_ATOL:
        raise ValueError("matrix is not Hermitian within 1e-12")
    # Symmetrize so roundoff below the tolerance cannot bias the iteration.
    return (m + m.conj().T) / 2.0


def hermitian_eigenvalues(m: np.ndarray) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, sorted descending.

    Cyclic Jacobi iteration with complex plane rotations: every sweep visits
    each off-diagonal pair (p, q) once and applies the unitary 2x2 rotation
    that zeroes that entry. Off-diagonal mass decreases monotonically, so the
    diagonal converges to the spectrum; the result is accurate to well under
    1e-10 of the spectral norm.

    Parameters
    ----------
    m : array_like
        Square Hermitian matrix (Hermiticity enforced within 1e-12).

    Returns
    -------
    numpy.ndarray
        Real eigenvalues in descending order.

    Raises
    ------
    ValueError
        Non-square or non-Hermitian input.
    RuntimeError
        No convergence after 100 sweeps.
    """
    mh = _as_hermitian(m)
    n = mh.shape[0]
    if n == 0:
        return np.array([])
    if n == 1:
        return np.array([mh[0, 0].real])

    # Plain nested lists of Python complex; fast for the sizes seen here.
    a = [[complex(mh[i, j]) for j in range(n)] for i in range(n)]
    scale = max(1.0, max(abs(a[i][j]) for i in range(n) for j in range(n)))
    threshold = 1e-14 * scale

    for _ in range(MAX_JACOBI_SWEEPS):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off = max(off, abs(a[p][q]))
        if off <= threshold:
            return np.array(sorted((a[i][i].real for i in range(n)), reverse=True))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                r = abs(apq)
                if r <= threshold * 1e-2:
                    continue
                phase = apq / r
                alpha = a[p][p].real
                beta = a[q][q].real
                tau = (alpha - beta) / (2.0 * r)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(tau * tau + 1.0))
                else:
                    t = -1.0 / (-tau + math.sqrt(tau * tau + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                a[p][p] = complex(alpha + t * r)
                a[q][q] = complex(beta - t * r)
                a[p][q] = 0.0j
                a[q][p] = 0.0j
                sconj = s * phase.conjugate()
                sphase = s * phase
                for k in range(n):
                    if k == p or k == q:
                        continue
                    akp = a[k][p]
                    akq = a[k][q]
                    new_kp = c * akp + sconj * akq
                    new_kq = -sphase * akp + c * akq
                    a[k][p] = new_kp
                    a[k][q] = new_kq
                    a[p][k] = new_kp.conjugate()
                    a[q][k] = new_kq.conjugate()
    raise RuntimeError("Jacobi iteration did not converge within 100 sweeps")


def is_psd(m: np.ndarray, tol: float = 1e-10) -> bool:
    """Whether the smallest eigenvalue of a Hermitian matrix is >= -tol."""
    eig = hermitian_eigenvalues(m)
    return bool(eig.size == 0 or eig[-1] >= -tol)
