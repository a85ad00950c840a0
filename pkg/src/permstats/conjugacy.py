"""Enumeration and uniform sampling of conjugacy classes.

``enumerate_class`` builds each element of C_lambda exactly once,
directly from cycle templates: the smallest unplaced element always
leads the next cycle, which makes the decomposition canonical and the
stream order deterministic.  A filter over all of S_n is kept as the
test oracle (:func:`enumerate_class_filter`).

Streams are deterministic, so brute-force scans can be split across
workers by stride (worker w of N takes elements w, w+N, w+2N, ...) with
results independent of N; see :func:`stride`.
"""

from __future__ import annotations

from collections import Counter
from itertools import islice, permutations as _tuples
from typing import Iterator

from .partitions import Partition
from .permutations import Permutation
from .rng import SplitMix64, derive_seed


def _iter_class_images(lam: Partition) -> Iterator[tuple[int, ...]]:
    """Raw image tuples of C_lambda (hot path for the oracles)."""
    n = lam.n
    images = [0] * (n + 1)  # 1-based; slot 0 unused

    def rec(avail: tuple[int, ...], counts: Counter) -> Iterator[tuple[int, ...]]:
        if not avail:
            yield tuple(images[1:])
            return
        lead, rest = avail[0], avail[1:]
        for size in sorted(counts):
            counts[size] -= 1
            if not counts[size]:
                del counts[size]
            if size == 1:
                images[lead] = lead
                yield from rec(rest, counts)
            else:
                for body in _tuples(rest, size - 1):
                    prev = lead
                    for elem in body:
                        images[prev] = elem
                        prev = elem
                    images[prev] = lead
                    chosen = set(body)
                    yield from rec(
                        tuple(x for x in rest if x not in chosen), counts
                    )
            counts[size] = counts.get(size, 0) + 1

    yield from rec(tuple(range(1, n + 1)), Counter(lam.parts))


def enumerate_class(lam: Partition) -> Iterator[Permutation]:
    """Each element of C_lambda exactly once, in a fixed order."""
    for images in _iter_class_images(lam):
        yield Permutation(images, check=False)


def enumerate_class_filter(lam: Partition) -> Iterator[Permutation]:
    """Oracle implementation: filter all n! permutations by cycle type."""
    for images in _tuples(range(1, lam.n + 1)):
        w = Permutation(images, check=False)
        if w.cycle_type() == lam:
            yield w


def stride(lam: Partition, worker: int, workers: int) -> Iterator[Permutation]:
    """Deterministic share of enumerate_class for one worker of N."""
    if not 0 <= worker < workers:
        raise ValueError(f"worker {worker} outside [0, {workers})")
    return islice(enumerate_class(lam), worker, None, workers)


def sample_class_uniform(lam: Partition, seed: int) -> Permutation:
    """One uniform element of C_lambda, reproducible from the seed.

    A fixed cycle template (consecutive blocks of sizes lam.parts) is
    filled with a SplitMix64-shuffled copy of [n]; every permutation of
    cycle type lambda arises from exactly z_lambda fillings, so the
    output is uniform over C_lambda.
    """
    n = lam.n
    labels = list(range(1, n + 1))
    SplitMix64(seed).shuffle(labels)
    images = [0] * (n + 1)
    pos = 0
    for part in lam.parts:
        block = labels[pos : pos + part]
        for a, b in zip(block, block[1:]):
            images[a] = b
        images[block[-1]] = block[0]
        pos += part
    return Permutation(images[1:], check=False)


def sample_class_many(lam: Partition, seed: int, count: int) -> Iterator[Permutation]:
    """Samples 0..count-1; sample i is seeded with derive_seed(seed, i),
    so any worker partition of the index range reproduces the stream."""
    for i in range(count):
        yield sample_class_uniform(lam, derive_seed(seed, i))
