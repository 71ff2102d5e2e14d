"""Monte Carlo checks of the channel and the energy bookkeeping.

Random numbers
--------------
Trials are cut into consecutive blocks of ``BLOCK_SIZE`` (the last block may
be short). Block ``k`` draws from

    numpy.random.Generator(numpy.random.Philox(SeedSequence(seed, spawn_key=(k,))))

i.e. the Philox-4x64-10 counter-based generator keyed through numpy's
SeedSequence hash. Each block draws a (2, m) array of doubles with
``Generator.random``: row 0 decides the source/medium bit, row 1 the second
bit of the trial. Blocks are independent of one another, so the merged
counts do not depend on how blocks are spread over workers.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .channel import ChannelJoint, mutual_information
from .energy import energy_report
from .thermo import ThermalMedium, error_rate

BLOCK_SIZE = 1 << 16
_MAX_SEED = 1 << 64


@dataclass(frozen=True)
class McConfig:
    trials: int
    seed: int
    p0: float = 0.5
    b: float = 0.0

    def __post_init__(self):
        if int(self.trials) != self.trials or self.trials < 1:
            raise ValueError(f"trials must be a positive integer, got {self.trials!r}")
        _check_seed(self.seed)
        for name in ("p0", "b"):
            v = float(getattr(self, name))
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {v!r}")
            object.__setattr__(self, name, v)
        object.__setattr__(self, "trials", int(self.trials))


@dataclass(frozen=True)
class ChannelCounts:
    n00: int
    n01: int
    n10: int
    n11: int
    trials: int

    def __post_init__(self):
        cells = (self.n00, self.n01, self.n10, self.n11)
        if min(cells) < 0:
            raise ValueError("counts must be nonnegative")
        if sum(cells) != self.trials:
            raise ValueError(f"counts sum to {sum(cells)}, expected {self.trials}")

    @property
    def table(self) -> np.ndarray:
        return np.array([[self.n00, self.n01], [self.n10, self.n11]], dtype=np.int64)

    def __add__(self, other: "ChannelCounts") -> "ChannelCounts":
        return ChannelCounts(
            self.n00 + other.n00,
            self.n01 + other.n01,
            self.n10 + other.n10,
            self.n11 + other.n11,
            self.trials + other.trials,
        )


def _check_seed(seed) -> int:
    if int(seed) != seed or not 0 <= seed < _MAX_SEED:
        raise ValueError(f"seed must be an integer in [0, 2**64), got {seed!r}")
    return int(seed)


def block_generator(seed: int, block: int) -> np.random.Generator:
    """Generator for block ``block`` of a run seeded with ``seed``."""
    ss = np.random.SeedSequence(_check_seed(seed), spawn_key=(block,))
    return np.random.Generator(np.random.Philox(ss))


def _blocks(trials: int) -> list[tuple[int, int]]:
    n_blocks = -(-trials // BLOCK_SIZE)
    return [(k, min(BLOCK_SIZE, trials - k * BLOCK_SIZE)) for k in range(n_blocks)]


def _map_blocks(fn, trials: int, workers: int | None):
    blocks = _blocks(trials)
    if workers is None or workers <= 1:
        return [fn(k, m) for k, m in blocks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda km: fn(*km), blocks))


def simulate_channel(config: McConfig, workers: int | None = None) -> ChannelCounts:
    """Sample ``config.trials`` uses of the copy channel.

    Each trial draws X = 1 with probability p1 = 1 - p0, then sets Y = X
    flipped with probability b.
    """
    p1 = 1.0 - config.p0

    def one_block(k: int, m: int) -> ChannelCounts:
        u = block_generator(config.seed, k).random((2, m))
        x = u[0] < p1
        y = x ^ (u[1] < config.b)
        c = np.bincount(2 * x.astype(np.int64) + y, minlength=4)
        return ChannelCounts(int(c[0]), int(c[1]), int(c[2]), int(c[3]), m)

    parts = _map_blocks(one_block, config.trials, workers)
    total = parts[0]
    for part in parts[1:]:
        total = total + part
    return total


def empirical_mutual_information(counts: ChannelCounts) -> float:
    """Plug-in estimate of I(X, Y) from observed frequencies (no bias correction)."""
    if counts.trials <= 0:
        raise ValueError("need at least one trial")
    return mutual_information(ChannelJoint.from_table(counts.table / counts.trials))


def mutual_information_std_error(counts: ChannelCounts) -> float:
    """Analytic (delta-method) standard error of the plug-in estimate.

    sqrt(Var[L] / N) with L = log2(P(x, y) / (P(x) P(y))) evaluated at the
    empirical frequencies. Zero when the estimate is degenerate.
    """
    p = counts.table / counts.trials
    px, py = p.sum(axis=1), p.sum(axis=0)
    mask = p > 0
    log_ratio = np.zeros_like(p)
    log_ratio[mask] = np.log2(p[mask] / np.outer(px, py)[mask])
    mean = float(np.sum(p * log_ratio))
    var = float(np.sum(p * log_ratio**2)) - mean**2
    return math.sqrt(max(var, 0.0) / counts.trials)


def empirical_energy_audit(
    medium: ThermalMedium, trials: int, seed: int, workers: int | None = None
) -> float:
    """Energy per useful bit estimated by sampling media before and after copying.

    Before copying each medium sits in its upper level with probability b
    (Gibbs state, E0 = 0). A fair source bit X is then copied onto it, and
    the medium ends in Y = X xor (initial level). The sampled mean energies
    give the before/after averages; the redundancy n = 1/I is the
    closed-form Shannon-limit value, as no decoder is simulated.
    """
    if medium.delta <= 0:
        raise ValueError(f"delta must be positive, got {medium.delta!r}")
    if int(trials) != trials or trials < 1:
        raise ValueError(f"trials must be a positive integer, got {trials!r}")
    b = error_rate(medium).b

    def one_block(k: int, m: int) -> tuple[int, int]:
        u = block_generator(seed, k).random((2, m))
        before = u[0] < b
        after = (u[1] < 0.5) ^ before
        return int(before.sum()), int(after.sum())

    parts = _map_blocks(one_block, int(trials), workers)
    excited_before = sum(p[0] for p in parts)
    excited_after = sum(p[1] for p in parts)
    e_before = medium.delta * excited_before / trials
    e_after = medium.delta * excited_after / trials
    n = energy_report(medium).redundancy_n
    return n * (e_after - e_before)
