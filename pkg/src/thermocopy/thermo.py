"""Two-level medium in thermal equilibrium.

The medium's levels |0> (pure medium, energy E0) and |1> (unprepared,
E0 + delta) are populated with Gibbs weights. The copy error rate is the
upper-level population, which stays in (0, 1/2] as long as delta >= 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.special import expit

from .copier import MediumNoise


@dataclass(frozen=True)
class ThermalMedium:
    beta: float
    delta: float
    e0: float = 0.0

    def __post_init__(self):
        beta, delta = float(self.beta), float(self.delta)
        if not (beta > 0 and math.isfinite(beta)):
            raise ValueError(f"beta must be positive and finite, got {beta!r}")
        if not math.isfinite(delta):
            raise ValueError(f"delta must be finite, got {delta!r}")
        if delta < 0:
            raise ValueError(
                f"delta must be >= 0, got {delta!r}: the error rate equals the "
                "upper-level population only on the b <= 1/2 branch"
            )
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "e0", float(self.e0))

    @property
    def e1(self) -> float:
        return self.e0 + self.delta

    @property
    def x(self) -> float:
        """Dimensionless gap beta * delta."""
        return self.beta * self.delta


@dataclass(frozen=True)
class Occupation:
    p0: float
    p1: float


def occupation(medium: ThermalMedium) -> Occupation:
    # expit(x) = 1 / (1 + exp(-x)), evaluated without overflow
    x = medium.x
    return Occupation(float(expit(x)), float(expit(-x)))


def error_rate(medium: ThermalMedium) -> MediumNoise:
    """Error rate b = P1 of the medium, carrying 1/2 - b = tanh(x/2)/2 exactly."""
    x = medium.x
    return MediumNoise(float(expit(-x)), margin=0.5 * math.tanh(0.5 * x))


def delta_for_error_rate(beta: float, noise: MediumNoise) -> float:
    """Level splitting that produces error rate ``noise.b`` at ``beta``.

    Inverse of :func:`error_rate`: delta = ln((1-b)/b) / beta.
    """
    beta = float(beta)
    if not (beta > 0 and math.isfinite(beta)):
        raise ValueError(f"beta must be positive and finite, got {beta!r}")
    b = noise.b
    if b == 0.0:
        raise ValueError("b = 0 needs an infinite level splitting")
    if b > 0.5:
        raise ValueError(f"b = {b!r} > 1/2 has no thermal medium with delta >= 0")
    t = 2.0 * noise.margin
    if t < 0.5:
        # near b = 1/2 the log-ratio form cancels; 2 atanh(1 - 2b) does not
        return 2.0 * math.atanh(t) / beta
    return (math.log1p(-b) - math.log(b)) / beta
