"""The copy process viewed as a binary noisy channel X -> Y.

X is the bit stored in A, Y the bit found in B after copying. All
information quantities are in bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .copier import MediumNoise, SourceDistribution
from .densmat import TOL


@dataclass(frozen=True, eq=False)
class ChannelJoint:
    """Joint table ``p_xy[i, j] = P(X_i, Y_j)`` with its marginals."""

    p_xy: np.ndarray
    p_x: np.ndarray
    p_y: np.ndarray

    def __post_init__(self):
        p_xy = np.array(self.p_xy, dtype=float).reshape(2, 2)
        p_x = np.array(self.p_x, dtype=float).reshape(2)
        p_y = np.array(self.p_y, dtype=float).reshape(2)
        if np.any(p_xy < 0) or np.any(p_xy > 1):
            raise ValueError("joint probabilities must lie in [0, 1]")
        if abs(p_xy.sum() - 1.0) > TOL:
            raise ValueError(f"joint table sums to {p_xy.sum()!r}, not 1")
        if np.max(np.abs(p_xy.sum(axis=1) - p_x)) > TOL or np.max(
            np.abs(p_xy.sum(axis=0) - p_y)
        ) > TOL:
            raise ValueError("marginals are inconsistent with the joint table")
        for arr in (p_xy, p_x, p_y):
            arr.setflags(write=False)
        object.__setattr__(self, "p_xy", p_xy)
        object.__setattr__(self, "p_x", p_x)
        object.__setattr__(self, "p_y", p_y)

    @classmethod
    def from_table(cls, p_xy) -> "ChannelJoint":
        p_xy = np.asarray(p_xy, dtype=float)
        return cls(p_xy, p_xy.sum(axis=1), p_xy.sum(axis=0))

    @property
    def transition(self) -> np.ndarray:
        """``p_ij = P(Y_j | X_i)``; rows with P(X_i) = 0 are left as zeros."""
        out = np.zeros((2, 2))
        for i in range(2):
            if self.p_x[i] > 0:
                out[i] = self.p_xy[i] / self.p_x[i]
        return out


def joint_distribution(dist: SourceDistribution, noise: MediumNoise) -> ChannelJoint:
    p0, p1, b = dist.p0, dist.p1, noise.b
    q = 1.0 - b
    p_xy = np.array([[p0 * q, p0 * b], [p1 * b, p1 * q]])
    return ChannelJoint(p_xy, [p0, p1], [p0 * q + p1 * b, p0 * b + p1 * q])


def mutual_information(joint: ChannelJoint) -> float:
    """Transinformation I(X, Y) in bits, summed term by term.

    Zero-probability cells contribute nothing (0 log 0 = 0).
    """
    total = 0.0
    for i in range(2):
        for j in range(2):
            pij = float(joint.p_xy[i, j])
            if pij > 0.0:
                total += pij * math.log2(pij / (joint.p_x[i] * joint.p_y[j]))
    return total


def _xlog2x(x: float) -> float:
    return x * math.log2(x) if x > 0.0 else 0.0


def mutual_information_symmetric(noise: MediumNoise) -> float:
    """I(X, Y) = 1 + (1-b) log2(1-b) + b log2(b) for a uniform source."""
    b = noise.b
    return 1.0 + _xlog2x(1.0 - b) + _xlog2x(b)
