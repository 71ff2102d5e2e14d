"""Energy spent per useful bit when copying onto a thermal medium.

With error rate b, a bit of useful information needs n = 1/I(b) noisy
symbols. Copying a fair bit into each medium raises its mean energy from
delta*b (Gibbs) to delta/2, so the energy per useful bit is

    W = n (delta/2 - delta b) = delta (1/2 - b) / I(b).

W grows with delta. As delta -> 0 it tends to ln(4)/beta. The "log 4" in
that limit is a natural log even though I is in bits. Expanding with
t = tanh(beta delta / 2) gives numerator delta t / 2 ~ beta delta^2 / 4 and
I ~ t^2 / (2 ln 2) ~ beta^2 delta^2 / (8 ln 2), so W -> 2 ln 2 / beta.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Literal

import numpy as np

from .channel import mutual_information_symmetric
from .copier import MediumNoise
from .thermo import ThermalMedium, error_rate

# Below this bias t = 1 - 2b, I(b) is evaluated from its power series.
SERIES_THRESHOLD = 1e-4
_LN2 = math.log(2.0)


@dataclass(frozen=True)
class EnergyReport:
    delta: float
    b: float
    info_bits: float
    redundancy_n: float
    avg_energy_before: float
    avg_energy_after: float
    w_per_useful_bit: float


@dataclass(frozen=True)
class SweepRow:
    delta: float
    b: float
    info_bits: float
    redundancy_n: float
    w: float

    def asdict(self) -> dict:
        return asdict(self)


def _info_bits(noise: MediumNoise) -> float:
    """I(b) for a uniform source, accurate in relative terms for all b <= 1/2.

    Three algebraically equal forms of 1 + (1-b) log2(1-b) + b log2(b),
    with t = 1 - 2b:

    * t < 1e-4: the series (1/ln 2) sum_k t^(2k) / (2k (2k-1)), k = 1..3
    * t < 1/2: (2 t atanh(t) + log1p(-t^2)) / (2 ln 2), no cancellation
    * otherwise the b-form directly (b <= 1/4 there, nothing cancels)
    """
    t = 2.0 * noise.margin
    if t < SERIES_THRESHOLD:
        t2 = t * t
        return t2 * (1.0 / 2.0 + t2 * (1.0 / 12.0 + t2 / 30.0)) / _LN2
    if t < 0.5:
        return (2.0 * t * math.atanh(t) + math.log1p(-t * t)) / (2.0 * _LN2)
    return mutual_information_symmetric(noise)


def redundancy(noise: MediumNoise) -> float:
    """Symbols needed per useful bit at the Shannon limit, n = 1/I(b)."""
    if noise.b >= 0.5:
        raise ValueError(f"b = {noise.b!r}: no information survives for b >= 1/2")
    return 1.0 / _info_bits(noise)


def energy_report(medium: ThermalMedium) -> EnergyReport:
    if medium.delta <= 0:
        raise ValueError(f"delta must be positive, got {medium.delta!r}")
    noise = error_rate(medium)
    delta = medium.delta
    info = _info_bits(noise)
    return EnergyReport(
        delta=delta,
        b=noise.b,
        info_bits=info,
        redundancy_n=1.0 / info,
        avg_energy_before=delta * noise.b,
        avg_energy_after=0.5 * delta,
        # quotient form; delta/2 - delta*b would cancel as b -> 1/2
        w_per_useful_bit=delta * noise.margin / info,
    )


def energy_per_useful_bit(beta: float, delta: float) -> float:
    """Shorthand for ``energy_report(ThermalMedium(beta, delta)).w_per_useful_bit``."""
    return energy_report(ThermalMedium(beta, delta)).w_per_useful_bit


def copy_bound(beta: float) -> float:
    """Lowest energy per useful bit, ln(4)/beta, reached as delta -> 0."""
    beta = float(beta)
    if not (beta > 0 and math.isfinite(beta)):
        raise ValueError(f"beta must be positive and finite, got {beta!r}")
    return math.log(4.0) / beta


def delta_grid(
    delta_min: float,
    delta_max: float,
    steps: int,
    spacing: Literal["linear", "log"] = "log",
) -> np.ndarray:
    if not (0 < delta_min < delta_max) or not math.isfinite(delta_max):
        raise ValueError(
            f"need 0 < delta_min < delta_max, got {delta_min!r}, {delta_max!r}"
        )
    if int(steps) != steps or steps < 2:
        raise ValueError(f"steps must be an integer >= 2, got {steps!r}")
    if spacing == "log":
        return np.geomspace(delta_min, delta_max, int(steps))
    if spacing == "linear":
        return np.linspace(delta_min, delta_max, int(steps))
    raise ValueError(f"spacing must be 'linear' or 'log', got {spacing!r}")


def sweep(
    beta: float,
    delta_min: float,
    delta_max: float,
    steps: int,
    spacing: Literal["linear", "log"] = "log",
) -> list[SweepRow]:
    """Energy per useful bit on a grid of level splittings, increasing delta."""
    rows = []
    for delta in delta_grid(delta_min, delta_max, steps, spacing):
        r = energy_report(ThermalMedium(beta, float(delta)))
        rows.append(SweepRow(r.delta, r.b, r.info_bits, r.redundancy_n, r.w_per_useful_bit))
    return rows
