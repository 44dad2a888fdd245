"""Complex 2x2/4x4 matrix primitives for two-qubit gate work.

Everything here is a pure function over immutable ndarray values.  Matrix
exponentials of Hermitian matrices are computed spectrally (eigendecomposition,
never ODE stepping), so propagation error in the simulator is limited to the
physics of finite pulse strength, not the numerics.
"""

from __future__ import annotations

import numpy as np

from .config import tolerances
from .errors import NonHermitian, NonUnitary

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

PAULIS = {"i": I2, "x": SIGMA_X, "y": SIGMA_Y, "z": SIGMA_Z}

# The 16 two-qubit Pauli products, keyed by axis pair ("x", "y") -> sigma_x (x) sigma_y.
PAULI_PRODUCTS = {
    (a, b): np.kron(PAULIS[a], PAULIS[b]) for a in "ixyz" for b in "ixyz"
}

XX = PAULI_PRODUCTS[("x", "x")]
YY = PAULI_PRODUCTS[("y", "y")]
ZZ = PAULI_PRODUCTS[("z", "z")]


def max_norm(m) -> float:
    """Entrywise max-abs norm used by every tolerance check."""
    return float(np.abs(m).max())


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two 2x2 matrices, (a (x) b)[2i+k, 2j+l] = a[i,j] b[k,l]."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != (2, 2) or b.shape != (2, 2):
        raise ValueError("kron expects two 2x2 matrices")
    return np.kron(a, b)


def unitary4(m, tol: float | None = None) -> np.ndarray:
    """Validate and return a 4x4 unitary as a complex ndarray.

    Raises:
        NonUnitary: if ||U†U - I||_max exceeds ``tol`` (default: the global
            construction tolerance).
    """
    u = np.asarray(m, dtype=complex)
    if u.shape != (4, 4):
        raise NonUnitary(f"expected a 4x4 matrix, got shape {u.shape}")
    if not np.all(np.isfinite(u.view(float))):
        raise NonUnitary("matrix contains NaN or Inf entries")
    if tol is None:
        tol = tolerances.construction
    defect = max_norm(u.conj().T @ u - np.eye(4))
    if defect > tol:
        raise NonUnitary(
            f"||U†U - I||_max = {defect:.3e} exceeds tolerance {tol:.3e}"
        )
    return u


def hermitian4(m, tol: float | None = None) -> np.ndarray:
    """Validate and return a 4x4 Hermitian matrix as a complex ndarray."""
    h = np.asarray(m, dtype=complex)
    if h.shape != (4, 4):
        raise NonHermitian(f"expected a 4x4 matrix, got shape {h.shape}")
    if not np.all(np.isfinite(h.view(float))):
        raise NonHermitian("matrix contains NaN or Inf entries")
    if tol is None:
        tol = tolerances.construction
    defect = max_norm(h - h.conj().T)
    if defect > tol:
        raise NonHermitian(
            f"||H - H†||_max = {defect:.3e} exceeds tolerance {tol:.3e}"
        )
    return h


def expm_hermitian(h, t: float) -> np.ndarray:
    """exp(-i t H) for Hermitian H, via the spectral theorem.

    The result is unitary to machine precision because the eigenvalue phases
    are exponentiated exactly and the eigenvector matrix is orthonormal.
    """
    h = hermitian4(h)
    w, v = np.linalg.eigh(h)
    phases = np.exp(-1j * t * w)
    return (v * phases) @ v.conj().T


def expm2_hermitian(h, t: float) -> np.ndarray:
    """exp(-i t H) for a 2x2 Hermitian H (spectral, same contract as 4x4)."""
    h = np.asarray(h, dtype=complex)
    if max_norm(h - h.conj().T) > tolerances.construction:
        raise NonHermitian("2x2 matrix is not Hermitian within tolerance")
    w, v = np.linalg.eigh(h)
    return (v * np.exp(-1j * t * w)) @ v.conj().T


def det4(m) -> complex:
    """Determinant of a 4x4 matrix (LU with partial pivoting)."""
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4):
        raise ValueError("det4 expects a 4x4 matrix")
    return complex(np.linalg.det(m))


def rotation(axis: str, angle: float) -> np.ndarray:
    """Single-qubit rotation R_axis(angle) = exp(-i angle sigma_axis / 2)."""
    sigma = PAULIS[axis]
    return np.cos(angle / 2) * I2 - 1j * np.sin(angle / 2) * sigma
