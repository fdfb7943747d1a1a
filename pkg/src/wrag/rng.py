"""Seeded 64-bit generator (splitmix64) with unbiased bounded draws.

Python's ``random`` module is avoided on purpose: its bounded-integer
algorithm is an implementation detail, while the growth process must
reproduce bit-for-bit from a seed on any platform.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15


class RngStream:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = int(seed) & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN_GAMMA) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        """Uniform integer in ``[0, k)`` by rejection of the biased tail."""
        if k <= 0:
            raise ValueError("bound must be positive")
        limit = ((1 << 64) // k) * k
        while True:
            x = self.next_u64()
            if x < limit:
                return x % k

    def __repr__(self) -> str:
        return f"RngStream(state={self.state:#018x})"
