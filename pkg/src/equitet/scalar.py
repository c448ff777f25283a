"""Exact rational scalars: decimal parsing and perfect square roots.

Every squared length, squared area (16*S^2) and squared-volume determinant
(288*V^2) in this package is a :class:`Scalar`, i.e. an exact rational.
Floating point appears only in the realization and oracle layers, never in a
classification decision.
"""

from __future__ import annotations

import math
from fractions import Fraction

# Arbitrary-precision rational in lowest terms with positive denominator.
Scalar = Fraction

__all__ = ["Scalar", "ParseError", "parse_decimal", "perfect_square_root", "format_sqrt"]


class ParseError(ValueError):
    """Malformed decimal literal; ``position`` is the offending character index."""

    def __init__(self, text: str, position: int, message: str):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


def _is_digit(ch: str) -> bool:
    return "0" <= ch <= "9"


def parse_decimal(text: str) -> Scalar:
    """Parse a plain decimal literal ("3", "-0.25", "12.5") into an exact Scalar.

    The result is the exact rational value of the literal: "0.1" becomes 1/10,
    never the nearest binary double.  Grammar: optional sign, one or more
    digits, optional "." followed by one or more digits.
    """
    i, n = 0, len(text)
    if i < n and text[i] in "+-":
        i += 1
    first_digit = i
    while i < n and _is_digit(text[i]):
        i += 1
    if i == first_digit:
        raise ParseError(text, i, "expected a digit")
    if i < n and text[i] == ".":
        i += 1
        first_frac = i
        while i < n and _is_digit(text[i]):
            i += 1
        if i == first_frac:
            raise ParseError(text, i, "expected a digit after the decimal point")
    if i != n:
        raise ParseError(text, i, f"unexpected character {text[i]!r}")
    return Fraction(text)


def perfect_square_root(s: Scalar) -> Scalar | None:
    """Exact square root of a nonnegative rational, or None if it is irrational.

    Because Scalars are stored in lowest terms, s is the square of a rational
    iff its numerator and denominator are both perfect squares.
    """
    if s < 0:
        raise ValueError(f"square root of negative value {s}")
    num, den = s.numerator, s.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


def format_sqrt(s: Scalar) -> str:
    """Render the square root of an exact squared quantity for display.

    Perfect squares print exactly ("25" -> "5", "9/4" -> "3/2"); anything else
    prints as "sqrt(...)" of the exact radicand.
    """
    root = perfect_square_root(s)
    if root is not None:
        return str(root)
    return f"sqrt({s})"
