"""Direct evaluators for the permutation statistics handled here.

Every evaluator is definition-literal: it quantifies over positions or
pairs exactly as the statistic is defined, with no shortcuts, because
these functions are the trusted base of every brute-force oracle in the
package.  Descents are positions i < n with w(i) > w(i+1); a cyclic
descent additionally compares w(n) against w(1); inversions are pairs
i < j with w(i) > w(j); an excedance is w(i) > i; an element i is a
cyclic valley / peak / double ascent / double descent according to the
sign pattern of (w^-1(i) - i, w(i) - i).

The registry maps lowercase statistic names to evaluators; those names
are the CLI and JSON vocabulary.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .permutations import Permutation

Images = Sequence[int]


def _des(im: Images) -> int:
    return sum(1 for i in range(len(im) - 1) if im[i] > im[i + 1])


def _maj(im: Images) -> int:
    return sum(i + 1 for i in range(len(im) - 1) if im[i] > im[i + 1])


def _inv(im: Images) -> int:
    total = 0
    for i in range(len(im) - 1):
        v = im[i]
        for u in im[i + 1 :]:
            if v > u:
                total += 1
    return total


def _baj(im: Images) -> int:
    n = len(im)
    return sum((i + 1) * (n - i - 1) for i in range(n - 1) if im[i] > im[i + 1])


def _baj_minus_inv(im: Images) -> int:
    return _baj(im) - _inv(im)


def _cdes(im: Images) -> int:
    n = len(im)
    if n == 0:
        return 0
    count = sum(1 for i in range(n - 1) if im[i] > im[i + 1])
    if im[n - 1] > im[0]:  # wrap-around comparison; false for n = 1
        count += 1
    return count


def _exc(im: Images) -> int:
    return sum(1 for i, v in enumerate(im, start=1) if v > i)


def _weak_exc(im: Images) -> int:
    return sum(1 for i, v in enumerate(im, start=1) if v >= i)


def _aexc(im: Images) -> int:
    return sum(1 for i, v in enumerate(im, start=1) if v < i)


def _fix(im: Images) -> int:
    return sum(1 for i, v in enumerate(im, start=1) if v == i)


def _inverse_images(im: Images) -> list[int]:
    out = [0] * len(im)
    for i, v in enumerate(im, start=1):
        out[v - 1] = i
    return out


def _cyclic_family(im: Images) -> tuple[int, int, int, int]:
    """(cv, cpk, cda, cdd) counts."""
    pre = _inverse_images(im)
    cv = cpk = cda = cdd = 0
    for i in range(1, len(im) + 1):
        before, after = pre[i - 1], im[i - 1]
        if before > i < after:
            cv += 1
        elif before < i > after:
            cpk += 1
        elif before < i < after:
            cda += 1
        elif before > i > after:
            cdd += 1
    return cv, cpk, cda, cdd


def _cv(im: Images) -> int:
    return _cyclic_family(im)[0]


def _cpk(im: Images) -> int:
    return _cyclic_family(im)[1]


def _cda(im: Images) -> int:
    return _cyclic_family(im)[2]


def _cdd(im: Images) -> int:
    return _cyclic_family(im)[3]


def _ile(im: Images) -> int:
    # pairs i < j with w^-1(j) < j < w(j) < w(i)
    n = len(im)
    pre = _inverse_images(im)
    total = 0
    for j in range(2, n + 1):
        wj = im[j - 1]
        if wj > j and pre[j - 1] < j:
            for i in range(1, j):
                if im[i - 1] > wj:
                    total += 1
    return total


def _den(im: Images) -> int:
    total = 0
    for j in range(2, len(im) + 1):
        wj = im[j - 1]
        for i in range(1, j):
            wi = im[i - 1]
            if wj < wi <= j or wi <= j < wj or j < wj < wi:
                total += 1
    return total


_EVALUATORS: dict[str, Callable[[Images], int]] = {
    "des": _des,
    "maj": _maj,
    "inv": _inv,
    "baj": _baj,
    "baj_minus_inv": _baj_minus_inv,
    "cdes": _cdes,
    "exc": _exc,
    "weak_exc": _weak_exc,
    "aexc": _aexc,
    "cv": _cv,
    "cpk": _cpk,
    "cda": _cda,
    "cdd": _cdd,
    "ile": _ile,
    "den": _den,
    "fix": _fix,
}

STATISTIC_NAMES: tuple[str, ...] = tuple(_EVALUATORS)


def raw_evaluator(name: str) -> Callable[[Images], int]:
    """Evaluator operating on raw image tuples (oracle hot path)."""
    try:
        return _EVALUATORS[name]
    except KeyError:
        raise ValueError(
            f"unknown statistic {name!r}; known: {', '.join(STATISTIC_NAMES)}"
        ) from None


def evaluate(name: str, w: Permutation) -> int:
    return raw_evaluator(name)(w.images)


def des(w: Permutation) -> int:
    return _des(w.images)


def maj(w: Permutation) -> int:
    return _maj(w.images)


def inv(w: Permutation) -> int:
    return _inv(w.images)


def baj(w: Permutation) -> int:
    return _baj(w.images)


def cdes(w: Permutation) -> int:
    return _cdes(w.images)


def fix(w: Permutation) -> int:
    return _fix(w.images)


def ile(w: Permutation) -> int:
    return _ile(w.images)


def den(w: Permutation) -> int:
    return _den(w.images)


def exc_family(w: Permutation) -> tuple[int, int, int]:
    """(exc, weak_exc, aexc); exc + aexc + fix = n."""
    im = w.images
    return _exc(im), _weak_exc(im), _aexc(im)


def cyclic_family(w: Permutation) -> tuple[int, int, int, int]:
    """(cv, cpk, cda, cdd); cv + cda = exc."""
    return _cyclic_family(w.images)
