"""Exact rational values and their text form.

Every probability, mean, and moment in this package is a
:class:`fractions.Fraction`: arbitrary precision, always in lowest terms
with a positive denominator, and never touched by floating point.  This
module adds the wire format used by the CLI and all JSON/CSV artifacts:
``"p/q"``, shortened to ``"p"`` when the denominator is 1.

>>> format_rational(Fraction(109, 3))
'109/3'
>>> parse_rational("-5/6") + parse_rational("1/3")
Fraction(-1, 2)
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; whitespace around tokens is ignored."""
    body = text.strip()
    try:
        return Fraction(body)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc
