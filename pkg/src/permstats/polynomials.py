"""Dense univariate polynomials over exact rationals.

Coefficients are stored low degree first (``coeffs[i]`` multiplies
``n**i``) with no trailing zeros, so the leading coefficient is nonzero
unless the polynomial is identically zero (empty coefficient tuple).
Evaluation and interpolation are exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .rationals import format_rational, parse_rational


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Polynomial:
    """Immutable polynomial with Fraction coefficients.

    >>> p = Polynomial([0, -1, 3]) / 12       # (3n^2 - n)/12
    >>> p(9)
    Fraction(39, 2)
    >>> str(p)
    '(1/4)n^2 - (1/12)n'
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        self.coeffs = _trim([Fraction(c) for c in coeffs])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, n: int | Fraction) -> Fraction:
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * n + c
        return value

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Polynomial":
        return self * (Fraction(1) / Fraction(scalar))

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = format_rational(mag)
            else:
                var = "n" if power == 1 else f"n^{power}"
                body = var if mag == 1 else f"({format_rational(mag)}){var}"
            parts.append(f"{sign} {body}" if parts else
                         (f"-{body}" if c < 0 else body))
        return " ".join(parts)

    def to_json(self) -> list[str]:
        """Ordered coefficient array, index i = coefficient of n^i."""
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, coeffs: Sequence[str]) -> "Polynomial":
        return cls([parse_rational(c) for c in coeffs])


def poly_eval(p: Polynomial, n: int) -> Fraction:
    return p(n)


def lagrange_interpolate(
    points: Sequence[tuple[int, Fraction | int]],
) -> Polynomial:
    """The unique polynomial of degree < len(points) through all points.

    Nodes must be pairwise distinct integers.

    >>> lagrange_interpolate([(0, 0), (1, 1), (2, 4)]).coeffs
    (Fraction(0, 1), Fraction(0, 1), Fraction(1, 1))
    """
    if not points:
        raise ValueError("interpolation needs at least one point")
    nodes = [x for x, _ in points]
    if len(set(nodes)) != len(nodes):
        raise ValueError(f"duplicate interpolation nodes in {nodes}")
    result = Polynomial()
    for xi, yi in points:
        basis = Polynomial([1])
        denom = Fraction(1)
        for xj in nodes:
            if xj == xi:
                continue
            basis = basis * Polynomial([-xj, 1])
            denom *= xi - xj
        result = result + basis * (Fraction(yi) / denom)
    return result
