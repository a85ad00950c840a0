"""Permutations of [n] = {1, ..., n} in one-line notation.

A :class:`Permutation` stores the image tuple ``images`` where
``images[i-1]`` is the image of ``i``; all positions and values are
1-based to match the usual combinatorial conventions.  The text form is
the bracketed one-line word ``[2,3,1]``.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Sequence

from .partitions import Partition


class Permutation:
    __slots__ = ("images",)

    def __init__(self, images: Iterable[int], check: bool = True):
        self.images = tuple(images)
        if check and sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of [n]: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        """Image of i, 1-based."""
        return self.images[i - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.images) + "]"

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1), check=False)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse the bracketed one-line form, e.g. ``"[2,3,1]"``."""
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"permutation syntax is [2,3,1]; got {text!r}")
        entries = [t for t in re.split(r"[,\s]+", body[1:-1].strip()) if t]
        return cls(int(t) for t in entries)

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for a, b in zip(cycle, (*cycle[1:], cycle[0])):
                if a in seen or not 1 <= a <= n:
                    raise ValueError(f"bad cycle element {a}")
                seen.add(a)
                images[a - 1] = b
        return cls(images)

    def inverse(self) -> "Permutation":
        out = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            out[v - 1] = i
        return Permutation(out, check=False)

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each led by its smallest element, sorted by leader."""
        seen = [False] * self.n
        out = []
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            cycle = [start]
            seen[start - 1] = True
            v = self.images[start - 1]
            while v != start:
                cycle.append(v)
                seen[v - 1] = True
                v = self.images[v - 1]
            out.append(tuple(cycle))
        return out

    def cycle_type(self) -> Partition:
        return Partition(sorted((len(c) for c in self.cycles()), reverse=True))


def compose(f: Permutation, g: Permutation) -> Permutation:
    """The permutation mapping i to f(g(i))."""
    if f.n != g.n:
        raise ValueError(f"size mismatch: {f.n} vs {g.n}")
    return Permutation((f.images[v - 1] for v in g.images), check=False)


def conjugate(w: Permutation, s: Permutation) -> Permutation:
    """s w s^-1; preserves cycle type."""
    if w.n != s.n:
        raise ValueError(f"size mismatch: {w.n} vs {s.n}")
    out = [0] * w.n
    for i, wi in enumerate(w.images, start=1):
        out[s.images[i - 1] - 1] = s.images[wi - 1]
    return Permutation(out, check=False)


def conjugate_by_transposition(w: Permutation, i: int, j: int) -> Permutation:
    """(i j) w (i j); an involution on each conjugacy class."""
    out = list(w.images)
    out[i - 1], out[j - 1] = out[j - 1], out[i - 1]
    for k, v in enumerate(out):
        if v == i:
            out[k] = j
        elif v == j:
            out[k] = i
    return Permutation(out, check=False)


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic one-line order."""
    from itertools import permutations as _perms

    for images in _perms(range(1, n + 1)):
        yield Permutation(images, check=False)
