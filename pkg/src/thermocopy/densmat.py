"""Dense complex matrices on one qubit (dim 2) or two qubits (dim 4).

Two-qubit operators use the ordering A ⊗ B with basis

    index 0: |0 pm>    index 1: |0 um>    index 2: |1 pm>    index 3: |1 um>

where the medium states are identified as pm -> |0>, um -> |1>. Every 4x4
literal in this package and its tests relies on this ordering.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

TOL = 1e-12
DIMS = (2, 4)

# Basis labels for the two factors; positions match the matrix indices.
A_LABELS = ("ket0", "ket1")
B_LABELS = ("pm", "um")


class DensityMatrixError(ValueError):
    """A matrix failed one of the density-matrix invariants.

    Attributes
    ----------
    invariant : str
        One of ``"hermitian"``, ``"trace"`` or ``"psd"``.
    violation : float
        Size of the violation (max |M - M^H|, |Tr M - 1|, or minus the
        smallest eigenvalue).
    value : float
        The offending quantity itself (for ``"trace"`` the trace).
    """

    def __init__(self, invariant: str, violation: float, value: float):
        self.invariant = invariant
        self.violation = float(violation)
        self.value = float(value)
        super().__init__(
            f"{invariant} violation: {self.violation:.3e} (value {self.value:.6g})"
        )


def as_matrix(m, dims=DIMS) -> np.ndarray:
    """Return ``m`` as a read-only complex square array, checking its size."""
    arr = np.array(m, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] not in dims:
        raise ValueError(f"expected a square matrix of dimension {dims}, got shape {arr.shape}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, positive semidefinite, unit-trace matrix of dimension 2 or 4.

    Construct through :func:`validate_density`; the constructor itself checks
    the same invariants.
    """

    matrix: np.ndarray

    def __post_init__(self):
        arr = as_matrix(self.matrix)
        _check_invariants(arr)
        object.__setattr__(self, "matrix", arr)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def diagonal(self) -> np.ndarray:
        """Real parts of the diagonal (the level populations)."""
        return self.matrix.diagonal().real.copy()

    def trace(self) -> float:
        return float(np.trace(self.matrix).real)

    def purity(self) -> float:
        """Tr(rho^2); 1 for pure states, 1/dim for the maximally mixed state."""
        return float(np.trace(self.matrix @ self.matrix).real)

    def allclose(self, other, atol: float = TOL) -> bool:
        other = other.matrix if isinstance(other, DensityMatrix) else as_matrix(other)
        return other.shape == self.matrix.shape and bool(
            np.max(np.abs(self.matrix - other)) <= atol
        )

    def __array__(self, dtype=None, copy=None):
        return np.array(self.matrix, dtype=dtype)

    def __repr__(self):
        return f"DensityMatrix(dim={self.dim}, diag={self.diagonal().tolist()})"


def _check_invariants(arr: np.ndarray, tol: float = TOL) -> None:
    herm = float(np.max(np.abs(arr - arr.conj().T)))
    if herm > tol:
        raise DensityMatrixError("hermitian", herm, herm)
    tr = complex(np.trace(arr))
    if abs(tr - 1) > tol:
        raise DensityMatrixError("trace", abs(tr - 1), tr.real)
    # eigenvalues of the Hermitian part
    lowest = float(np.linalg.eigvalsh(0.5 * (arr + arr.conj().T))[0])
    if lowest < -tol:
        raise DensityMatrixError("psd", -lowest, lowest)


def validate_density(m) -> DensityMatrix:
    """Check the density-matrix invariants of ``m`` and wrap it.

    Raises
    ------
    DensityMatrixError
        Naming the first failed invariant (hermitian, trace, psd, checked in
        that order) and by how much it failed.
    ValueError
        If ``m`` is not a 2x2 or 4x4 matrix.
    """
    return DensityMatrix(as_matrix(m))


def tensor(a, b) -> np.ndarray:
    """Kronecker product ``a ⊗ b`` of two 2x2 matrices.

    >>> np.real(np.diag(tensor(np.diag([0.7, 0.3]), np.diag([0.9, 0.1])))).round(12).tolist()
    [0.63, 0.07, 0.27, 0.03]
    """
    a = as_matrix(a.matrix if isinstance(a, DensityMatrix) else a, dims=(2,))
    b = as_matrix(b.matrix if isinstance(b, DensityMatrix) else b, dims=(2,))
    return as_matrix(np.kron(a, b))


def is_unitary(u, tol: float = TOL) -> bool:
    """True iff max |U^H U - I| over all entries is at most ``tol``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    u = as_matrix(u)
    err = np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0])))
    return bool(err <= tol)


def conjugate_by_unitary(rho: DensityMatrix, u) -> DensityMatrix:
    """Return ``U rho U^H`` for a 4x4 state and 4x4 unitary."""
    u = as_matrix(u, dims=(4,))
    if rho.dim != 4:
        raise ValueError(f"expected a two-qubit state, got dim {rho.dim}")
    if not is_unitary(u, TOL):
        raise ValueError("conjugating matrix is not unitary")
    return DensityMatrix(u @ rho.matrix @ u.conj().T)


def partial_trace(rho: DensityMatrix, keep: Literal["A", "B"]) -> DensityMatrix:
    """Reduce a two-qubit state to subsystem ``keep``."""
    if rho.dim != 4:
        raise ValueError(f"expected a two-qubit state, got dim {rho.dim}")
    # axes: (a, b, a', b')
    t = rho.matrix.reshape(2, 2, 2, 2)
    if keep == "A":
        reduced = np.einsum("ijkj->ik", t)
    elif keep == "B":
        reduced = np.einsum("ijil->jl", t)
    else:
        raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")
    return DensityMatrix(reduced)


def ket(index: int, dim: int = 4) -> np.ndarray:
    """Standard basis column vector."""
    v = np.zeros(dim, dtype=complex)
    v[index] = 1.0
    return v


def projector(vec) -> np.ndarray:
    """|v><v| for a (not necessarily normalized) vector."""
    v = np.asarray(vec, dtype=complex).reshape(-1)
    return np.outer(v, v.conj())
