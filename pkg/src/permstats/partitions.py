"""Integer partitions as cycle types of conjugacy classes.

A partition of n is stored as a weakly decreasing tuple of positive
parts.  ``a(i)`` counts parts equal to i; the centralizer order is
``z = prod(i**a_i * a_i!)`` and the class C_lambda has ``n!/z`` elements.

Text forms accepted by :func:`Partition.parse`:

* comma list: ``"5,4"``
* power form: ``"1^2,3"`` (two parts of size 1 and one of size 3)
"""

from __future__ import annotations

from collections import Counter
from math import factorial
from typing import Iterable, Iterator


class Partition:
    __slots__ = ("parts", "_counts")

    def __init__(self, parts: Iterable[int]):
        self.parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if any(p < 1 for p in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        self._counts = Counter(self.parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def a(self, i: int) -> int:
        """Number of parts equal to i."""
        return self._counts[i]

    def min_part(self) -> int:
        return self.parts[-1] if self.parts else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        parts: list[int] = []
        for token in text.strip().split(","):
            token = token.strip()
            if not token:
                continue
            if "^" in token:
                base, _, exp = token.partition("^")
                parts.extend([int(base)] * int(exp))
            else:
                parts.append(int(token))
        if not parts:
            raise ValueError(f"empty partition spec: {text!r}")
        return cls(parts)


def z_lambda(lam: Partition) -> int:
    """Centralizer order prod(i^a_i * a_i!)."""
    z = 1
    for i, ai in lam._counts.items():
        z *= i**ai * factorial(ai)
    return z


def class_size(lam: Partition) -> int:
    """|C_lambda| = n!/z_lambda."""
    return factorial(lam.n) // z_lambda(lam)


def enumerate_partitions(n: int, min_part: int = 1) -> Iterator[Partition]:
    """All partitions of n with every part >= min_part, each exactly once.

    Parts are emitted weakly decreasing, partitions in reverse
    lexicographic order starting from (n).

    >>> [str(p) for p in enumerate_partitions(9, 3)]
    ['9', '6,3', '5,4', '3,3,3']
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if min_part < 1:
        raise ValueError("min_part must be at least 1")

    def rec(remaining: int, cap: int, prefix: tuple[int, ...]) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition(prefix)
            return
        for p in range(min(remaining, cap), min_part - 1, -1):
            yield from rec(remaining - p, p, prefix + (p,))

    yield from rec(n, n, ())
