"""Deterministic 64-bit RNG used for all instance generation.

Every randomized artifact in this package (Coconut instances, TopSpin
action costs, puzzle scrambles, synthetic cost lists, randomized trials)
is derived from a splitmix64 stream so that runs replicate bit-for-bit
across machines and across reimplementations in other languages.

splitmix64 reference behaviour is pinned by test vectors in
tests/test_rng.py: seed 0 produces
0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F, ...

Derived streams: ``derive(seed, index)`` reseeds a fresh stream with
``mix64(seed XOR mix64(index + 1))`` so per-instance streams are
independent of how many draws the parent made.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """The splitmix64 output mix of a 64-bit value."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class Rng:
    """splitmix64 stream with the small set of draws the package needs."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK
        return mix64(self.state)

    def below(self, n: int) -> int:
        """Uniform int in [0, n).  Plain modulo; the bias for n << 2**64 is
        below 2**-32 and the method is trivially portable."""
        if n <= 0:
            raise ValueError("below() needs n >= 1")
        return self.next_u64() % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform int in [lo, hi] inclusive."""
        return lo + self.below(hi - lo + 1)

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        # 53-bit mantissa draw, the conventional u64 >> 11 construction.
        u = self.next_u64() >> 11
        return lo + (hi - lo) * (u * (1.0 / (1 << 53)))

    def geometric(self, p: float) -> int:
        """Number of failures before the first success; support {0, 1, ...}."""
        q = 0
        while self.uniform() >= p:
            q += 1
        return q

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def shuffle(self, items: list) -> None:
        # Fisher-Yates, high-to-low, using below() for portability.
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def derive(seed: int, index: int) -> Rng:
    """Independent child stream for instance ``index`` of master ``seed``."""
    return Rng(mix64((seed ^ mix64((index + 1) & _MASK)) & _MASK))
