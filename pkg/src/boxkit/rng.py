"""Deterministic pseudo-random streams for graph sampling.

A 64-bit master seed expands through SplitMix64 into xoshiro256** state,
so identical seeds give identical graphs on every platform (all integer
arithmetic, no floats).  Per-sample streams are derived from the master
seed and a sample index rather than drawn sequentially, which keeps each
sample reproducible in isolation.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1


def _splitmix64_next(state: int) -> tuple[int, int]:
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    z ^= z >> 31
    return state, z


def mix64(x: int) -> int:
    """One SplitMix64 scramble of a 64-bit value."""
    _, z = _splitmix64_next(x & _MASK64)
    return z


def derive_seed(master_seed: int, index: int) -> int:
    """Seed for the index-th sample of a run keyed by master_seed."""
    return mix64((master_seed & _MASK64) ^ mix64(index + 1))


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK64


class Xoshiro256StarStar:
    """xoshiro256** with SplitMix64 state expansion."""

    __slots__ = ("_s",)

    def __init__(self, seed: int) -> None:
        state = seed & _MASK64
        s = []
        for _ in range(4):
            state, z = _splitmix64_next(state)
            s.append(z)
        self._s = s

    def next_u64(self) -> int:
        s = self._s
        result = (_rotl((s[1] * 5) & _MASK64, 7) * 9) & _MASK64
        t = (s[1] << 17) & _MASK64
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound), unbiased via rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = _MASK64 + 1 - (_MASK64 + 1) % bound
        while True:
            r = self.next_u64()
            if r < limit:
                return r % bound

    def bernoulli(self, numerator: int, denominator: int) -> bool:
        """True with probability numerator/denominator, exactly.

        Compares a 64-bit draw against the rational threshold in integer
        arithmetic, so no rounding enters the stream.
        """
        return self.next_u64() * denominator < numerator << 64

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates driven by this stream."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
