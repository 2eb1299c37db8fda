"""SplitMix64, the fixed generator behind every randomized check.

Using a spelled-out algorithm instead of :mod:`random` keeps trial streams
identical across Python versions and across ports to other languages.
"""
from __future__ import annotations

from fractions import Fraction

MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z &= MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


def derive_seed(seed: int, tag: int, index: int = 0) -> int:
    """Seed of sub-stream `index` for purpose `tag`, decorrelated from `seed` itself."""
    return (mix64(seed + tag * GOLDEN) + index) & MASK


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK
        return mix64(self.state)

    def randbelow(self, n: int) -> int:
        """Uniform in [0, n) by rejection, so no modulo bias."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            v = self.next_u64()
            if v < limit:
                return v % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform in the closed range [lo, hi]."""
        return lo + self.randbelow(hi - lo + 1)

    def rational(self, height: int) -> Fraction:
        """Numerator uniform in [-H, H] minus {0}, denominator uniform in [1, H]."""
        num = self.randint(1, 2 * height)
        num = num - height - 1 if num <= height else num - height
        return Fraction(num, self.randint(1, height))

    def sample(self, population: list, k: int) -> list:
        """k distinct items by a partial Fisher-Yates shuffle."""
        pool = list(population)
        for i in range(k):
            j = i + self.randbelow(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]
