"""Self-contained xoshiro256** generator.

Instance generation must reproduce bit-for-bit from a seed across
platforms and implementations, so the generator is pinned to a named
algorithm instead of whatever the host runtime ships:

* seed expansion: SplitMix64 (Steele, Lea, Flood 2014), constants
  0x9E3779B97F4A7C15, 0xBF58476D1CE4E5B9, 0x94D049BB133111EB
* stream: xoshiro256** 1.0 (Blackman, Vigna 2018), scrambler
  rotl(s1 * 5, 7) * 9, shift 17, rotations 45
"""

from fractions import Fraction

_MASK64 = (1 << 64) - 1


def _splitmix64(state: int):
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK64


class Xoshiro256StarStar:
    """Deterministic 64-bit generator; one instance per reproducible stream."""

    def __init__(self, seed: int):
        state = seed & _MASK64
        s = []
        for _ in range(4):
            state, word = _splitmix64(state)
            s.append(word)
        self._s = s

    def next64(self) -> int:
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
        """Unbiased integer in [0, bound) via rejection sampling."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next64()
            if x < limit:
                return x % bound

    def chance(self, p: Fraction) -> bool:
        """True with exact probability p (0 <= p <= 1)."""
        if not 0 <= p <= 1:
            raise ValueError("probability out of range")
        threshold = (p.numerator << 64) // p.denominator
        return self.next64() < threshold
