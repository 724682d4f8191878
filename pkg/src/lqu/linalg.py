"""Complex linear algebra helpers for small dense Hermitian problems.

Everything here operates on square numpy arrays of complex128. The heavy
lifting (eigendecomposition) is delegated to LAPACK via numpy; this module
adds the Hermiticity/positivity contracts the rest of the package relies on.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class NotHermitian(ValueError):
    """Input matrix deviates from its conjugate transpose beyond tolerance."""


class NoConvergence(ArithmeticError):
    """Eigensolver failed to converge."""


class NotPositiveSemidefinite(ValueError):
    """Matrix has an eigenvalue below the allowed negative tolerance."""


class DimensionMismatch(ValueError):
    """Operands do not share the required dimension."""


@dataclass(frozen=True)
class HermitianEigenSystem:
    """Eigendecomposition of a Hermitian matrix.

    eigenvalues are real and sorted ascending; eigenvectors holds the
    matching orthonormal eigenvectors as columns, so that
    V @ diag(w) @ V.conj().T reconstructs the input.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_square_complex(m, name: str = "matrix") -> np.ndarray:
    """Coerce to a square complex128 array, rejecting anything else."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"{name} must be square, got shape {a.shape}")
    return a


def hermiticity_defect(m: np.ndarray) -> float:
    """Largest entrywise deviation |m - m^dagger|."""
    return float(np.abs(m - m.conj().T).max())


def hermitian_eig(m, tol: float = 1e-10) -> HermitianEigenSystem:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    Raises NotHermitian if max |m - m^dagger| exceeds tol, and NoConvergence
    if the underlying iteration fails (only possible for pathological input).
    """
    a = as_square_complex(m)
    defect = hermiticity_defect(a)
    if defect > tol:
        raise NotHermitian(
            f"matrix is not Hermitian: max |m - m^H| = {defect:.3e} > {tol:.3e}"
        )
    # Work on the exactly-Hermitian part so LAPACK sees clean input.
    a = (a + a.conj().T) / 2
    try:
        w, v = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(f"eigendecomposition did not converge: {exc}") from exc
    return HermitianEigenSystem(eigenvalues=w, eigenvectors=v)


def matrix_sqrt_psd(m, neg_tol: float = 1e-8) -> np.ndarray:
    """Principal square root of a Hermitian PSD matrix.

    Eigenvalues in [-neg_tol, 0) are clamped to zero (rounding dirt from
    noise mixing or file input); anything below -neg_tol raises
    NotPositiveSemidefinite. Eigenvalues below dim * eps * max|lambda| are
    also zeroed: for rank-deficient input the eigensolver reports the null
    space as O(eps) noise, and sqrt would amplify +1e-16 to 1e-8.
    """
    eig = hermitian_eig(m)
    w = eig.eigenvalues
    if w[0] < -neg_tol:
        raise NotPositiveSemidefinite(
            f"smallest eigenvalue {w[0]:.3e} is below -{neg_tol:.3e}"
        )
    floor = w.shape[0] * np.finfo(float).eps * np.abs(w).max(initial=0.0)
    root = np.sqrt(np.where(w > floor, w, 0.0))
    v = eig.eigenvectors
    out = (v * root) @ v.conj().T
    return (out + out.conj().T) / 2


def kron(a, b) -> np.ndarray:
    """Kronecker product, result dimension dim(a) * dim(b)."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def trace_product(a, b, c, d) -> complex:
    """Tr(a b c d) for four same-dimension square matrices.

    Uses Tr(XY) = sum_ij X_ij Y_ji with X = ab, Y = cd, so the four-matrix
    product is never materialized.
    """
    mats = [as_square_complex(x, n) for x, n in zip((a, b, c, d), "abcd")]
    dim = mats[0].shape[0]
    for name, x in zip("bcd", mats[1:]):
        if x.shape[0] != dim:
            raise DimensionMismatch(
                f"operand {name} has dimension {x.shape[0]}, expected {dim}"
            )
    x = mats[0] @ mats[1]
    y = mats[2] @ mats[3]
    return complex((x * y.T).sum())
