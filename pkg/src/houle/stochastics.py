"""Seedable random source and the two sampler families used everywhere else.

The generator is splitmix64, fixed once for the whole package so that frozen
reference outputs stay valid across platforms and interpreter versions:

    state  <- (state + 0x9E3779B97F4A7C15) mod 2**64
    z      <- state
    z      <- ((z XOR (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z      <- ((z XOR (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    output <- z XOR (z >> 31)

A float in [0, 1) takes the top 53 bits of one output word.  Every sampler
below consumes exactly one stream draw per call; callers may rely on that to
reproduce runs draw-for-draw.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX_A = 0xBF58476D1CE4E5B9
_MIX_B = 0x94D049BB133111EB

Seed = int


def _mix64(z: int) -> int:
    """splitmix64 output scrambler (no counter advance)."""
    z = ((z ^ (z >> 30)) * _MIX_A) & MASK64
    z = ((z ^ (z >> 27)) * _MIX_B) & MASK64
    return (z ^ (z >> 31)) & MASK64


class RandomStream:
    """Single-owner splitmix64 stream.

    Not thread safe by design: a stream belongs to exactly one sampling loop.
    Parallel work splits off independent lanes with :func:`rng_lane` instead
    of sharing a stream.
    """

    __slots__ = ("_state",)

    def __init__(self, seed: Seed):
        self._state = int(seed) & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & MASK64
        return _mix64(self._state)

    def next_float(self) -> float:
        """Uniform double in [0, 1), 53-bit resolution."""
        return (self.next_u64() >> 11) * 2.0**-53


def rng_new(seed: Seed) -> RandomStream:
    return RandomStream(seed)


def rng_lane(seed: Seed, lane: int) -> RandomStream:
    """Independent stream for worker `lane` derived from a base seed.

    The lane seed is `mix64(seed XOR mix64((lane + 1) * GOLDEN))`: two
    scrambler rounds so that consecutive lanes start from uncorrelated
    counters.  Deterministic in (seed, lane).
    """
    if lane < 0:
        raise ValueError("lane index must be non-negative")
    lane_key = _mix64(((lane + 1) * _GOLDEN) & MASK64)
    return RandomStream(_mix64((int(seed) & MASK64) ^ lane_key))


@dataclass(frozen=True)
class UniformRange:
    """Half-open interval [lo, hi); degenerate lo == hi always yields lo."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValueError("uniform range bounds must be finite")
        if self.lo > self.hi:
            raise ValueError(f"uniform range has lo > hi: [{self.lo}, {self.hi})")


@dataclass(frozen=True)
class DiscreteDistribution:
    """Finite distribution over ordered outcomes, sampled by inverse CDF.

    Weights are normalized at construction; at least one must be strictly
    positive and none may be negative.  `outcomes` defaults to the index
    labels 0..n-1.
    """

    weights: tuple[float, ...]
    outcomes: tuple = None  # type: ignore[assignment]
    _cum: tuple[float, ...] = field(default=(), repr=False, compare=False)

    def __init__(self, weights, outcomes=None):
        weights = tuple(float(w) for w in weights)
        if not weights:
            raise ValueError("distribution needs at least one weight")
        if any(w < 0.0 or not math.isfinite(w) for w in weights):
            raise ValueError("weights must be finite and non-negative")
        total = math.fsum(weights)
        if total <= 0.0:
            raise ValueError("all-zero weights: distribution has no mass")
        norm = tuple(w / total for w in weights)
        if outcomes is None:
            outcomes = tuple(range(len(weights)))
        else:
            outcomes = tuple(outcomes)
            if len(outcomes) != len(weights):
                raise ValueError(
                    f"{len(outcomes)} outcomes for {len(weights)} weights"
                )
        acc, cum = 0.0, []
        for w in norm:
            acc += w
            cum.append(acc)
        cum[-1] = 1.0  # force exact top so a draw of 1 - ulp stays in range
        object.__setattr__(self, "weights", norm)
        object.__setattr__(self, "outcomes", outcomes)
        object.__setattr__(self, "_cum", tuple(cum))

    def __len__(self) -> int:
        return len(self.weights)


def sample_uniform(stream: RandomStream, r: UniformRange) -> float:
    """One draw from [r.lo, r.hi).  Consumes exactly one stream step."""
    u = stream.next_float()
    if r.hi == r.lo:
        return r.lo
    x = r.lo + (r.hi - r.lo) * u
    if x >= r.hi:  # guard the open end against rounding up
        x = math.nextafter(r.hi, r.lo)
    return x


def sample_discrete(stream: RandomStream, f: DiscreteDistribution) -> int:
    """Outcome index by inverse CDF.  Consumes exactly one stream step.

    Zero-weight outcomes are never returned: their cumulative interval is
    empty, so no draw in [0, 1) lands there.
    """
    u = stream.next_float()
    return bisect_right(f._cum, u)


def triangular_gray_distribution(levels: int) -> DiscreteDistribution:
    """Symmetric unimodal weights over `levels` gray indices.

    Weight of index i is proportional to (levels // 2 + 1 - |i - mid|) with
    mid the central index, so mid grays dominate and the extremes stay rare:
    3 levels give (0.25, 0.5, 0.25), 5 levels give (1,2,3,2,1)/9.
    """
    if levels < 3:
        raise ValueError("need at least 3 gray levels for a triangular profile")
    mid = (levels - 1) / 2.0
    peak = levels // 2 + 1
    return DiscreteDistribution(peak - abs(i - mid) for i in range(levels))
