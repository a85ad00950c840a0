"""Deterministic 64-bit pseudo-random generator.

All randomized operations in this package draw from SplitMix64 (Steele,
Lea & Flood's mixing function, as used by `java.util.SplitMix64` and as
the seeding algorithm of xoshiro).  It is implemented here in pure
integer arithmetic so that a given seed yields the same stream on every
platform and Python version.  Reproducibility contract:

* ``SplitMix64(seed)`` produces a fixed stream of 64-bit words.
* ``derive_seed(root, index)`` is the documented splitting rule: the
  generator for sample / worker ``index`` is seeded with the
  ``index``-th word of ``SplitMix64(root)``'s own stream, so any
  partition of indices across workers reproduces identical draws.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """SplitMix64 stream over 64-bit words."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_word(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return _mix(self._state)

    def next_below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection (no modulo bias)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            word = self.next_word()
            if word < limit:
                return word % bound

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.next_below(i + 1)
            items[i], items[j] = items[j], items[i]


def derive_seed(root: int, index: int) -> int:
    """Seed for the ``index``-th substream of ``root`` (see module docs).

    Equals the ``index``-th word of ``SplitMix64(root)``; the stream state
    after k steps is root + k*GOLDEN, so this is O(1) in ``index``.
    """
    if index < 0:
        raise ValueError("index must be nonnegative")
    return _mix((root + (index + 1) * _GOLDEN) & _MASK64)
