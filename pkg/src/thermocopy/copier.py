"""Copy a classical bit from system A onto a noisy medium B.

The copier is the permutation

    |0 pm> -> |0 0>    |1 pm> -> |1 1>
    |0 um> -> |0 1>    |1 um> -> |1 0>

i.e. a CNOT with A as control once pm/um are read as |0>/|1>. Only the two
basis states of A are copied faithfully; a superposition gets entangled
with B instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .densmat import (
    TOL,
    DensityMatrix,
    as_matrix,
    conjugate_by_unitary,
    partial_trace,
    projector,
    tensor,
)


def _check_probability(name: str, value: float) -> float:
    value = float(value)
    if not (0.0 <= value <= 1.0):
        raise ValueError(f"{name} must lie in [0, 1], got {value!r}")
    return value


@dataclass(frozen=True)
class SourceDistribution:
    """Probabilities that A stores "0" and "1"."""

    p0: float
    p1: float | None = None

    def __post_init__(self):
        p0 = _check_probability("p0", self.p0)
        p1 = 1.0 - p0 if self.p1 is None else _check_probability("p1", self.p1)
        if abs(p0 + p1 - 1.0) > TOL:
            raise ValueError(f"p0 + p1 must equal 1, got {p0 + p1!r}")
        object.__setattr__(self, "p0", p0)
        object.__setattr__(self, "p1", p1)


@dataclass(frozen=True)
class MediumNoise:
    """Probability ``b`` that the medium starts in the unprepared state.

    ``margin`` is 1/2 - b. It is normally derived from ``b``, but callers
    that know it more precisely than the subtraction can deliver (the
    thermal path near b = 1/2) pass it explicitly so that inverting ``b``
    keeps full relative precision.
    """

    b: float
    margin: float | None = None

    def __post_init__(self):
        b = _check_probability("b", self.b)
        margin = 0.5 - b if self.margin is None else float(self.margin)
        if abs(margin - (0.5 - b)) > TOL:
            raise ValueError(f"margin {margin!r} inconsistent with b={b!r}")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "margin", margin)


@dataclass(frozen=True)
class CopyResult:
    joint_after: DensityMatrix
    reduced_a: DensityMatrix
    reduced_b: DensityMatrix


def copier_unitary() -> np.ndarray:
    """The 4x4 real permutation matrix of the copier."""
    u = np.zeros((4, 4), dtype=complex)
    # column = input basis index, row = output basis index
    u[0, 0] = 1.0  # |0 pm> -> |0 0>
    u[1, 1] = 1.0  # |0 um> -> |0 1>
    u[3, 2] = 1.0  # |1 pm> -> |1 1>
    u[2, 3] = 1.0  # |1 um> -> |1 0>
    return as_matrix(u)


def overwrite_map() -> np.ndarray:
    """The irreversible "copy regardless of the medium" map.

    Sends |0 pm> and |0 um> to |0 0>, |1 pm> and |1 um> to |1 1>. It
    erases the medium's initial state and so cannot be unitary.
    """
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = m[0, 1] = 1.0
    m[3, 2] = m[3, 3] = 1.0
    return as_matrix(m)


def source_state(dist: SourceDistribution) -> DensityMatrix:
    return DensityMatrix(np.diag([dist.p0, dist.p1]))


def medium_state(noise: MediumNoise) -> DensityMatrix:
    return DensityMatrix(np.diag([1.0 - noise.b, noise.b]))


def copy_dense(dist: SourceDistribution, noise: MediumNoise) -> CopyResult:
    """Copy by explicit simulation: build rho_A ⊗ rho_B, conjugate, reduce.

    This is the reference route used to check :func:`copy_closed_form`.
    """
    rho_ab = DensityMatrix(tensor(source_state(dist), medium_state(noise)))
    after = conjugate_by_unitary(rho_ab, copier_unitary())
    return CopyResult(after, partial_trace(after, "A"), partial_trace(after, "B"))


def copy_closed_form(dist: SourceDistribution, noise: MediumNoise) -> CopyResult:
    """Copy using the printed post-copy populations, no matrix products.

    After copying, A is untouched and B holds "0" with probability
    p0 (1-b) + p1 b. The joint state stays diagonal:
    diag(p0 (1-b), p0 b, p1 b, p1 (1-b)).
    """
    p0, p1, b = dist.p0, dist.p1, noise.b
    q = 1.0 - b
    joint = np.diag([p0 * q, p0 * b, p1 * b, p1 * q])
    return CopyResult(
        DensityMatrix(joint),
        DensityMatrix(np.diag([p0, p1])),
        DensityMatrix(np.diag([p0 * q + p1 * b, p0 * b + p1 * q])),
    )


def copy_pure_input(alpha: complex, beta: complex) -> DensityMatrix:
    """Apply the copier to ``alpha|0> + beta|1>`` on a pure medium.

    For a superposition the output is entangled: the reduced state of B is
    mixed, so the copier does not clone.
    """
    alpha, beta = complex(alpha), complex(beta)
    norm = abs(alpha) ** 2 + abs(beta) ** 2
    if not math.isfinite(norm) or abs(norm - 1.0) > TOL:
        raise ValueError(f"|alpha|^2 + |beta|^2 must be 1, got {norm!r}")
    psi_a = np.array([alpha, beta])
    pm = np.array([1.0, 0.0])
    rho = DensityMatrix(projector(np.kron(psi_a, pm)))
    return conjugate_by_unitary(rho, copier_unitary())
