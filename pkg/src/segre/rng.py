"""Deterministic counter-based random stream (splitmix64).

The n-th draw is a pure function of (seed, n): the 64-bit state walks by a
fixed odd constant and a mixing finalizer whitens it.  Substreams for
parallel or per-trial work are derived by `spawn`, which hashes the stream
seed together with the child index, so serial and concurrent executions of
indexed trials see identical randomness.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """splitmix64 finalizer; a bijection on 64-bit words."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return (z ^ (z >> 31)) & MASK64


def derive_seed(seed: int, index: int) -> int:
    """Child seed for substream `index`; documented fixed mixing function."""
    return mix64((seed & MASK64) ^ mix64(((index + 1) * _GAMMA) & MASK64))


class RngState:
    """A splitmix64 stream positioned at (seed, counter)."""

    __slots__ = ("seed", "counter")

    def __init__(self, seed: int, counter: int = 0):
        self.seed = seed & MASK64
        self.counter = counter

    def next_u64(self) -> int:
        self.counter += 1
        return mix64((self.seed + _GAMMA * self.counter) & MASK64)

    def randrange(self, n: int) -> int:
        """Uniform draw from [0, n) by rejection, so no modulo bias."""
        if n <= 0:
            raise ValueError("randrange needs n >= 1")
        limit = ((1 << 64) // n) * n
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n

    def randint_signed(self, bound: int) -> int:
        """Uniform draw from [-bound, bound]."""
        return self.randrange(2 * bound + 1) - bound

    def spawn(self, index: int) -> "RngState":
        """An independent substream; same (seed, index) always gives the same child."""
        return RngState(derive_seed(self.seed, index))

    def __repr__(self) -> str:
        return f"RngState(seed={self.seed}, counter={self.counter})"
