"""Closed-form class means and the lemmas behind them.

All formulas are functions of n and the part counts a_1 (fixed points)
and a_2 (2-cycles) of the cycle type; every value is an exact Fraction.
The five regimes of the summary table are exposed per statistic so their
overlaps can be cross-checked:

* ``general``  - any cycle type, in terms of (n, a_1, a_2)
* ``min3``     - all parts of size at least 3 (a_1 = a_2 = 0)
* ``one_two``  - cycle type (1^a1, 2^a2), n = a_1 + 2 a_2
* ``two_only`` - cycle type (2^a2), n = 2 a_2
* ``sn``       - uniform over all of S_n

Domain guards are explicit and errors name the violated guard; the rows
for des/maj/inv/baj and the cyclic-descent row require n >= 2, and the
whole-group cyclic rows require n >= 2 because the 2-cycle identity
(sum of a_2/z over partitions equals 1/2) first holds there.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Callable, Mapping

from .errors import GuardError
from .partitions import Partition, enumerate_partitions, z_lambda

F = Fraction

Formula = Callable[[int, int, int], Fraction]


def _omega_block(n: int, a1: int, a2: int) -> Fraction:
    """Shared prefactor 1/2 + a2/(n(n-1)) - a1(a1-1)/(2n(n-1))."""
    return F(1, 2) + F(a2, n * (n - 1)) - F(a1 * (a1 - 1), 2 * n * (n - 1))


def _pair_shift(n: int, a1: int, a2: int) -> Fraction:
    """Coefficient of (j-i-1) in the inversion-pair probability."""
    return F(n - n * a1 - a1 + a1 * a1 - 2 * a2, n * (n - 1) * (n - 2))


def cdes_table_entry(n: int, a1: int, a2: int) -> Fraction:
    """Single-fraction form of the cyclic-descent mean (table version)."""
    return F(n * n - n + 2 * a2 - a1 * a1 + 3 * a1 - 2, 2 * (n - 1))


# The wide table: statistic -> regime -> formula in (n, a1, a2).
TABLE1: Mapping[str, Mapping[str, Formula]] = {
    "des": {
        "general": lambda n, a1, a2: F(n * n - n + 2 * a2 - a1 * a1 + a1, 2 * n),
        "min3": lambda n, a1, a2: F(n - 1, 2),
        "one_two": lambda n, a1, a2: F(n * n - a1 * a1, 2 * n),
        "two_only": lambda n, a1, a2: F(n, 2),
        "sn": lambda n, a1, a2: F(n - 1, 2),
    },
    "maj": {
        "general": lambda n, a1, a2: F(n * n - n + 2 * a2 - a1 * a1 + a1, 4),
        "min3": lambda n, a1, a2: F(n * (n - 1), 4),
        "one_two": lambda n, a1, a2: F(n * n - a1 * a1, 4),
        "two_only": lambda n, a1, a2: F(n * n, 4),
        "sn": lambda n, a1, a2: F(n * n - n, 4),
    },
    "inv": {
        "general": lambda n, a1, a2: F(
            3 * n * n - n + 2 * a2 - a1 * a1 + a1 - 2 * n * a1, 12
        ),
        "min3": lambda n, a1, a2: F(n * (3 * n - 1), 12),
        "one_two": lambda n, a1, a2: F((3 * n + a1) * (n - a1), 12),
        "two_only": lambda n, a1, a2: F(n * n, 4),
        "sn": lambda n, a1, a2: F(n * n - n, 4),
    },
    "baj": {
        "general": lambda n, a1, a2: F(
            (n + 1) * (n * n - n + 2 * a2 - a1 * a1 + a1), 12
        ),
        "min3": lambda n, a1, a2: F(n * (n * n - 1), 12),
        "one_two": lambda n, a1, a2: F((n + 1) * (n * n - a1 * a1), 12),
        "two_only": lambda n, a1, a2: F(n * n * (n + 1), 12),
        "sn": lambda n, a1, a2: F(comb(n + 1, 3), 4),
    },
    "baj_minus_inv": {
        "general": lambda n, a1, a2: F(
            (n - 2) * (n * n - n + 2 * a2 - a1 * a1 + a1), 12
        ),
        "min3": lambda n, a1, a2: F(n * (n - 1) * (n - 2), 12),
        "one_two": lambda n, a1, a2: F((n - 2) * (n * n - a1 * a1), 12),
        "two_only": lambda n, a1, a2: F(n * n * (n - 2), 12),
        "sn": lambda n, a1, a2: F(comb(n, 3), 4),
    },
    "cdes": {
        # three-term form: n/2 + (a2 - C(a1,2))/(n-1) + (a1-1)/(n-1)
        "general": lambda n, a1, a2: F(n, 2)
        + F(a2 - comb(a1, 2), n - 1)
        + F(a1 - 1, n - 1),
        "min3": lambda n, a1, a2: F((n + 1) * (n - 2), 2 * (n - 1)),
        "one_two": lambda n, a1, a2: F(n * n - a1 * a1 + 2 * a1 - 2, 2 * (n - 1)),
        "two_only": lambda n, a1, a2: F(n * n - 2, 2 * (n - 1)),
        "sn": lambda n, a1, a2: F(n, 2),
    },
    "weak_exc": {
        "general": lambda n, a1, a2: F(n + a1, 2),
        "min3": lambda n, a1, a2: F(n, 2),
        "one_two": lambda n, a1, a2: F(n + a1, 2),
        "two_only": lambda n, a1, a2: F(n, 2),
        "sn": lambda n, a1, a2: F(n + 1, 2),
    },
    "exc": {
        "general": lambda n, a1, a2: F(n - a1, 2),
        "min3": lambda n, a1, a2: F(n, 2),
        "one_two": lambda n, a1, a2: F(n - a1, 2),
        "two_only": lambda n, a1, a2: F(n, 2),
        "sn": lambda n, a1, a2: F(n - 1, 2),
    },
    "cda": {
        "general": lambda n, a1, a2: F(n - a1 - 2 * a2, 6),
        "min3": lambda n, a1, a2: F(n, 6),
        "one_two": lambda n, a1, a2: F(0),
        "two_only": lambda n, a1, a2: F(0),
        "sn": lambda n, a1, a2: F(n - 2, 6),
    },
    "cv": {
        "general": lambda n, a1, a2: F(n - a1 + a2, 3),
        "min3": lambda n, a1, a2: F(n, 3),
        "one_two": lambda n, a1, a2: F(n - a1, 2),
        "two_only": lambda n, a1, a2: F(n, 2),
        "sn": lambda n, a1, a2: F(2 * n - 1, 6),
    },
    "fix": {
        "general": lambda n, a1, a2: F(a1),
        "min3": lambda n, a1, a2: F(0),
        "one_two": lambda n, a1, a2: F(a1),
        "two_only": lambda n, a1, a2: F(0),
        "sn": lambda n, a1, a2: F(1),
    },
}
# aexc shares the exc row; cdd and cpk share the cda and cv rows.
TABLE1 = {**TABLE1, "aexc": TABLE1["exc"], "cdd": TABLE1["cda"], "cpk": TABLE1["cv"]}

COLUMNS = ("general", "min3", "one_two", "two_only", "sn")

# Smallest n for which the printed general-column formula applies.
_CLASS_GUARDS = {
    "des": 2, "maj": 2, "inv": 2, "baj": 2, "baj_minus_inv": 2, "cdes": 2,
}
# Smallest n for the whole-group column.
_SN_GUARDS = {"cdes": 2, "cda": 2, "cdd": 2, "cv": 2, "cpk": 2}


def column_formula(statistic: str, column: str) -> Formula:
    """Raw regime formula (no guards); for cross-regime consistency tests."""
    if statistic not in TABLE1:
        raise ValueError(f"no closed-form table row for {statistic!r}")
    if column not in COLUMNS:
        raise ValueError(f"unknown column {column!r}; known: {COLUMNS}")
    return TABLE1[statistic][column]


def table1_mean(statistic: str, lam: Partition) -> Fraction:
    """Exact mean of the statistic over the conjugacy class C_lambda."""
    if statistic not in TABLE1:
        raise ValueError(f"no closed-form table row for {statistic!r}")
    n = lam.n
    need = _CLASS_GUARDS.get(statistic, 1)
    if n < need:
        raise GuardError(f"{statistic} class mean requires n >= {need}, got n={n}")
    return TABLE1[statistic]["general"](n, lam.a(1), lam.a(2))


def whole_group_mean(statistic: str, n: int) -> Fraction:
    """Exact mean of the statistic over all of S_n."""
    if statistic not in TABLE1:
        raise ValueError(f"no closed-form table row for {statistic!r}")
    need = _SN_GUARDS.get(statistic, 1)
    if n < need:
        raise GuardError(f"{statistic} whole-group mean requires n >= {need}, got n={n}")
    return TABLE1[statistic]["sn"](n, 0, 0)


def omega_partition_probs(
    lam: Partition, i: int, j: int
) -> tuple[Fraction, Fraction, Fraction, Fraction, Fraction]:
    """Probabilities of the five-way split of C_lambda by the images of i, j.

    The classes are: both images outside {i, j}; the 2-cycle (i j); both
    fixed; exactly one of w(i)=j, w(j)=i; exactly one of i, j fixed.
    The first probability is computed by complement, so the five always
    sum to 1.  They do not depend on the actual values of i and j.
    """
    n = lam.n
    if n < 2:
        raise GuardError(f"omega split requires n >= 2, got n={n}")
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    a1, a2 = lam.a(1), lam.a(2)
    p2 = F(2 * a2, n * (n - 1))
    p3 = F(a1 * (a1 - 1), n * (n - 1))
    p4 = F(2, n - 1) * (1 - F(a1, n) - F(2 * a2, n))
    p5 = F(2 * a1, n) * (1 - F(a1 - 1, n - 1))
    p1 = 1 - (p2 + p3 + p4 + p5)
    return p1, p2, p3, p4, p5


def conditional_inversion_probs(
    n: int, i: int, j: int
) -> tuple[Fraction, Fraction, Fraction, Fraction, Fraction]:
    """P[w(i) > w(j)] conditioned on each of the five omega classes."""
    if n < 3:
        raise GuardError(f"conditional inversion probabilities require n >= 3, got n={n}")
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    gap = F(j - i - 1, 2 * (n - 2))
    return F(1, 2), F(1), F(0), F(1, 2) + gap, F(1, 2) - gap


def inversion_indicator_prob(lam: Partition, i: int, j: int) -> Fraction:
    """P over C_lambda that (i, j) is an inversion, i.e. w(i) > w(j).

    Depends on (i, j) only through j - i, and on the cycle type only
    through a_1 and a_2.
    """
    n = lam.n
    if n < 3:
        raise GuardError(f"inversion-pair probability requires n >= 3, got n={n}")
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    a1, a2 = lam.a(1), lam.a(2)
    return _omega_block(n, a1, a2) + (j - i - 1) * _pair_shift(n, a1, a2)


def statistic_weights(statistic: str, n: int) -> dict[tuple[int, int], Fraction]:
    """Inversion-pair weights realizing des, maj, inv, or baj."""
    if statistic == "des":
        return {(i, i + 1): F(1) for i in range(1, n)}
    if statistic == "maj":
        return {(i, i + 1): F(i) for i in range(1, n)}
    if statistic == "inv":
        return {(i, j): F(1) for i in range(1, n) for j in range(i + 1, n + 1)}
    if statistic == "baj":
        return {(i, i + 1): F(i * (n - i)) for i in range(1, n)}
    raise ValueError(f"{statistic!r} is not a weighted inversion statistic here")


def weight_alpha(weights: Mapping[tuple[int, int], Fraction]) -> Fraction:
    return sum(weights.values(), F(0))


def weight_beta(weights: Mapping[tuple[int, int], Fraction]) -> Fraction:
    return sum((F(j - i - 1) * w for (i, j), w in weights.items()), F(0))


def weighted_inversion_mean(
    lam: Partition, weights: Mapping[tuple[int, int], Fraction]
) -> Fraction:
    """Class mean of sum(wt(i,j) * [w(i) > w(j)]) from the pair probabilities.

    Independent of all part counts beyond a_1 and a_2.
    """
    n = lam.n
    if n < 3:
        raise GuardError(f"weighted inversion mean requires n >= 3, got n={n}")
    for (i, j) in weights:
        if not 1 <= i < j <= n:
            raise ValueError(f"weight key ({i},{j}) outside the strict upper triangle")
    a1, a2 = lam.a(1), lam.a(2)
    return _omega_block(n, a1, a2) * weight_alpha(weights) + _pair_shift(
        n, a1, a2
    ) * weight_beta(weights)


def exc_second_moment_and_variance(lam: Partition) -> tuple[Fraction, Fraction]:
    """(E[exc^2], Var[exc]) over C_lambda."""
    n, a1, a2 = lam.n, lam.a(1), lam.a(2)
    second = F((n - a1) * (n - a1 + 1), 4) - F(1, 2) * F(n - a1 + a2, 3)
    variance = F(n - a1 - 2 * a2, 12)
    return second, variance


def verify_z_identities(n: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """The four centralizer sums over all partitions of n.

    Returns (sum 1/z, sum a1/z, sum a1^2/z, sum a2/z); for n >= 2 these
    equal (1, 1, 2, 1/2).
    """
    if n < 2:
        raise GuardError(f"z-identities require n >= 2, got n={n}")
    s0 = s1 = s2 = s3 = F(0)
    for lam in enumerate_partitions(n):
        zinv = F(1, z_lambda(lam))
        a1 = lam.a(1)
        s0 += zinv
        s1 += zinv * a1
        s2 += zinv * a1 * a1
        s3 += zinv * lam.a(2)
    return s0, s1, s2, s3


def decomposition_residual(statistic: str, n: int) -> Fraction:
    """sum over lambda of E_lambda[X]/z_lambda, minus the S_n mean.

    Exactly zero for every table statistic: class means weighted by
    inverse centralizer orders recover the whole-group mean.
    """
    total = F(0)
    for lam in enumerate_partitions(n):
        total += F(1, z_lambda(lam)) * table1_mean(statistic, lam)
    return total - whole_group_mean(statistic, n)
