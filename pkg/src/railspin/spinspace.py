"""Spin-space domain types and a small dense complex linear-algebra kernel.

Basis conventions used throughout the package:

* single spin: index 0 is up, index 1 is down;
* electron pair (rails 3 and 4): index 2*s3 + s4, basis {uu, ud, du, dd};
* electron pair plus impurity: index 4*s3 + 2*s4 + s_imp, dimension 8.

All amplitudes are double-precision complex.  Every object is frozen after
construction and every operation is a pure function, so everything here is
safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Tolerances separating roundoff from genuinely invalid input.
HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
EIGENVALUE_CLAMP = 1e-10
EIGENVALUE_HARD_ERROR = 1e-8
NORMALIZATION_TOL = 1e-9

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)

KET_UP = np.array([1, 0], dtype=complex)
KET_DOWN = np.array([0, 1], dtype=complex)

# Two-electron spin states in the {uu, ud, du, dd} basis.
KET_UP_UP = np.array([1, 0, 0, 0], dtype=complex)
KET_DOWN_DOWN = np.array([0, 0, 0, 1], dtype=complex)
PSI_PLUS = np.array([0, 1, 1, 0], dtype=complex) / np.sqrt(2.0)
PSI_MINUS = np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2.0)

for _arr in (PAULI_X, PAULI_Y, PAULI_Z, IDENTITY_2, KET_UP, KET_DOWN,
             KET_UP_UP, KET_DOWN_DOWN, PSI_PLUS, PSI_MINUS):
    _arr.setflags(write=False)


def _frozen(values, shape=None) -> np.ndarray:
    """Copy into a read-only complex array, optionally checking the shape."""
    arr = np.array(values, dtype=complex)
    if shape is not None and arr.shape != shape:
        raise ValueError(f"expected shape {shape}, got {arr.shape}")
    arr.setflags(write=False)
    return arr


def tensor(a: np.ndarray, b: np.ndarray, *rest: np.ndarray) -> np.ndarray:
    """Kronecker product of two or more vectors, or of two or more matrices.

    Dimensions multiply; index ordering is row-major (left factor is the
    most significant index), consistent with the basis conventions above.
    """
    operands = (a, b) + rest
    arrays = [np.asarray(op, dtype=complex) for op in operands]
    ndim = arrays[0].ndim
    if ndim not in (1, 2) or any(arr.ndim != ndim for arr in arrays):
        raise ValueError("tensor operands must be all vectors or all matrices")
    out = arrays[0]
    for arr in arrays[1:]:
        out = np.kron(out, arr)
    return out


@dataclass(frozen=True)
class JointState:
    """Amplitudes of the two electrons plus the impurity spin (dimension 8).

    The vector need not be normalized; :meth:`normalized` returns a
    unit-norm copy.  Index layout: 4*s3 + 2*s4 + s_imp with up = 0.
    """

    vector: np.ndarray

    def __post_init__(self):
        vec = _frozen(self.vector, shape=(8,))
        if not np.all(np.isfinite(vec.view(float))):
            raise ValueError("joint-state amplitudes must be finite")
        object.__setattr__(self, "vector", vec)

    @classmethod
    def basis(cls, s3: int, s4: int, s_imp: int) -> "JointState":
        """Basis ket |s3 s4 s_imp> with 0 = up, 1 = down."""
        vec = np.zeros(8, dtype=complex)
        vec[4 * s3 + 2 * s4 + s_imp] = 1.0
        return cls(vec)

    @classmethod
    def from_parts(cls, electrons: np.ndarray, impurity: np.ndarray) -> "JointState":
        """Product of a two-electron spin vector (dim 4) and an impurity ket (dim 2)."""
        return cls(tensor(np.asarray(electrons, dtype=complex).reshape(4),
                          np.asarray(impurity, dtype=complex).reshape(2)))

    @property
    def norm_squared(self) -> float:
        return float(np.vdot(self.vector, self.vector).real)

    def is_normalized(self, tol: float = NORMALIZATION_TOL) -> bool:
        return abs(self.norm_squared - 1.0) <= tol

    def normalized(self) -> "JointState":
        norm = np.sqrt(self.norm_squared)
        if norm == 0.0:
            raise ValueError("cannot normalize the zero state")
        return JointState(self.vector / norm)


@dataclass(frozen=True)
class TwoQubitDensity:
    """4x4 density matrix of the electron spins in rails 3 and 4.

    Validated at construction: Hermitian, unit trace, and positive
    semidefinite up to a 1e-10 eigenvalue clamp.
    """

    matrix: np.ndarray

    def __post_init__(self):
        mat = _frozen(self.matrix, shape=(4, 4))
        if np.max(np.abs(mat - mat.conj().T)) > HERMITICITY_TOL:
            raise ValueError("density matrix is not Hermitian")
        if abs(np.trace(mat).real - 1.0) > TRACE_TOL:
            raise ValueError("density matrix trace differs from 1")
        if np.linalg.eigvalsh(mat).min() < -EIGENVALUE_CLAMP:
            raise ValueError("density matrix has a negative eigenvalue")
        object.__setattr__(self, "matrix", mat)

    @classmethod
    def from_pure(cls, vector: np.ndarray) -> "TwoQubitDensity":
        vec = np.asarray(vector, dtype=complex).reshape(4)
        norm2 = np.vdot(vec, vec).real
        if norm2 == 0.0:
            raise ValueError("cannot build a density from the zero vector")
        return cls(np.outer(vec, vec.conj()) / norm2)

    def weight(self, vector: np.ndarray) -> float:
        """Expectation <v|rho|v> for a normalized ket v."""
        vec = np.asarray(vector, dtype=complex).reshape(4)
        return float((vec.conj() @ self.matrix @ vec).real)

    def expectation(self, operator: np.ndarray) -> float:
        """Real expectation value of a Hermitian 4x4 operator."""
        return float(np.trace(np.asarray(operator, dtype=complex) @ self.matrix).real)


def as_density(rho) -> TwoQubitDensity:
    """Coerce a TwoQubitDensity or a raw 4x4 array into a validated density."""
    if isinstance(rho, TwoQubitDensity):
        return rho
    return TwoQubitDensity(rho)


def partial_trace_impurity(state) -> TwoQubitDensity:
    """Trace out the impurity spin, leaving the two-electron density matrix.

    Accepts a normalized JointState (or 8-vector), or a normalized 8x8
    density matrix over the joint space.  Raises ValueError when the input
    is not normalized, which usually signals a missing normalize call.
    """
    if isinstance(state, JointState):
        arr = state.vector
    else:
        arr = np.asarray(state, dtype=complex)
    if arr.shape == (8,):
        if abs(np.vdot(arr, arr).real - 1.0) > NORMALIZATION_TOL:
            raise ValueError("joint state must be normalized before tracing")
        tens = arr.reshape(2, 2, 2)
        reduced = np.einsum("abi,cdi->abcd", tens, tens.conj()).reshape(4, 4)
    elif arr.shape == (8, 8):
        if abs(np.trace(arr).real - 1.0) > NORMALIZATION_TOL:
            raise ValueError("joint density must have unit trace")
        tens = arr.reshape(2, 2, 2, 2, 2, 2)
        reduced = np.einsum("abicdi->abcd", tens).reshape(4, 4)
    else:
        raise ValueError("expected a dim-8 state vector or an 8x8 density matrix")
    # Symmetrize away roundoff so the density invariants hold exactly.
    reduced = 0.5 * (reduced + reduced.conj().T)
    return TwoQubitDensity(reduced)


def hermitian_eigenvalues(matrix: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, in descending order."""
    mat = np.asarray(matrix, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError("eigenvalue input must be a square matrix")
    if np.max(np.abs(mat - mat.conj().T)) > tol:
        raise ValueError("eigenvalue input must be Hermitian")
    return np.linalg.eigvalsh(mat)[::-1].copy()


def general_eigenvalues_psd_product(a, b) -> np.ndarray:
    """Eigenvalues of the product a*b of two density matrices, descending.

    The product of two positive semidefinite matrices has real nonnegative
    eigenvalues even though it is generally non-Hermitian.  Values in
    [-1e-10, 0) are clamped to zero; anything below -1e-8 (or with a
    significant imaginary part) signals invalid inputs and raises.
    """
    prod = as_density(a).matrix @ as_density(b).matrix
    raw = np.linalg.eigvals(prod)
    if np.max(np.abs(raw.imag)) > EIGENVALUE_HARD_ERROR:
        raise ValueError("product eigenvalues are not real; inputs are not valid densities")
    vals = raw.real
    if vals.min() < -EIGENVALUE_HARD_ERROR:
        raise ValueError("product eigenvalue is negative; inputs are not valid densities")
    vals = np.where(vals < 0.0, 0.0, vals)
    return np.sort(vals)[::-1].copy()
