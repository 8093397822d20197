"""Deterministic synthetic event-sequence generation.

Each event type receives a unit utility drawn from a log-normal
distribution, rounded half-up and clamped into the configured range; each
time point receives a uniform-random distinct subset of events with uniform
quantities. The pseudo-random generator is splitmix64 with Box-Muller
normal deviates, both published algorithms, so a seed pins the output
independent of the host's random module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidConfigError
from .model import EventSequence, UtilityTable

_MASK64 = (1 << 64) - 1


class PortableRng:
    """splitmix64: state advances by the golden-gamma constant, output is a
    threefold xor-shift/multiply mix of the state."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] (modulo reduction; the bias is
        negligible for the small ranges used here)."""
        return lo + self.next_u64() % (hi - lo + 1)

    def random(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def gauss(self, mu: float, sigma: float) -> float:
        """One Box-Muller normal deviate; u1 is shifted into (0, 1]."""
        u1 = ((self.next_u64() >> 11) + 1) * 2.0**-53
        u2 = self.random()
        return mu + sigma * math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)

    def choose_distinct(self, n: int, k: int) -> list[int]:
        """k distinct indexes from range(n), by partial Fisher-Yates."""
        pool = list(range(n))
        for j in range(k):
            swap = j + self.next_u64() % (n - j)
            pool[j], pool[swap] = pool[swap], pool[j]
        return pool[:k]


@dataclass(frozen=True)
class GenConfig:
    """Parameters of one synthetic sequence; the seed fully determines the output."""

    num_time_points: int
    alphabet_size: int
    events_per_point_min: int = 1
    events_per_point_max: int = 3
    quantity_range: tuple[int, int] = (1, 6)
    unit_utility_range: tuple[int, int] = (1, 1000)
    lognormal_location: float = math.log(50.0)
    lognormal_scale: float = 1.0
    seed: int = 0

    def validate(self) -> None:
        if self.num_time_points < 1 or self.alphabet_size < 1:
            raise InvalidConfigError("need at least one time point and one event type")
        if not 1 <= self.events_per_point_min <= self.events_per_point_max:
            raise InvalidConfigError("events-per-point range is empty or non-positive")
        if self.events_per_point_max > self.alphabet_size:
            raise InvalidConfigError("events per point cannot exceed the alphabet size")
        for lo, hi in (self.quantity_range, self.unit_utility_range):
            if not 1 <= lo <= hi:
                raise InvalidConfigError("value ranges must be non-empty and positive")
        if self.lognormal_scale <= 0:
            raise InvalidConfigError("lognormal_scale must be positive")


def generate(config: GenConfig) -> tuple[EventSequence, UtilityTable]:
    """Generate a sequence and its unit-utility table from ``config``."""
    config.validate()
    rng = PortableRng(config.seed)
    width = len(str(config.alphabet_size))
    events = [f"E{i:0{width}d}" for i in range(1, config.alphabet_size + 1)]

    util_lo, util_hi = config.unit_utility_range
    table: UtilityTable = {}
    for event in events:
        raw = math.exp(rng.gauss(config.lognormal_location, config.lognormal_scale))
        table[event] = min(max(int(raw + 0.5), util_lo), util_hi)

    qty_lo, qty_hi = config.quantity_range
    points = []
    for t in range(1, config.num_time_points + 1):
        count = rng.randint(config.events_per_point_min, config.events_per_point_max)
        chosen = sorted(rng.choose_distinct(config.alphabet_size, count))
        quantities = {events[i]: rng.randint(qty_lo, qty_hi) for i in chosen}
        points.append((t, quantities))
    return EventSequence.from_quantities(points, table), table
