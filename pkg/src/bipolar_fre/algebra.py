"""Exact arithmetic on the rational unit interval.

Everything in the package is built from three operators on ``[0, 1] ∩ Q``:
the product t-norm, its residual implication (Goguen) and the standard
negation ``x -> 1 - x``. Values are :class:`UnitRational`, a range-checked
:class:`fractions.Fraction`, so equality tests are exact.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, ParseError, RangeError

__all__ = [
    "UnitRational",
    "ZERO",
    "ONE",
    "parse_scalar",
    "tnorm",
    "residuum",
    "negate",
    "eval_bipolar_row",
    "eval_fre_row",
]

_DECIMAL = re.compile(r"^\s*(\d+(?:\.\d*)?|\.\d+)\s*$")
_RATIO = re.compile(r"^\s*(\d+)\s*/\s*(\d+)\s*$")


class UnitRational(Fraction):
    """A reduced fraction ``p/q`` with ``0 <= p/q <= 1``.

    Accepts ints, Fractions, and exact strings (``"0.8"`` is 4/5, ``"2/3"``).
    Floats are refused: a binary float is almost never the number the user
    typed.
    """

    __slots__ = ()

    def __new__(cls, numerator=0, denominator=None):
        if isinstance(numerator, float) or isinstance(denominator, float):
            raise TypeError("floats are not exact; pass a string or Fraction")
        if isinstance(numerator, cls) and denominator is None:
            return numerator
        self = super().__new__(cls, numerator, denominator)
        if self < 0 or self > 1:
            raise RangeError(Fraction(self))
        return self

    def __repr__(self):
        return f"UnitRational({self.numerator}, {self.denominator})"


ZERO = UnitRational(0)
ONE = UnitRational(1)


def parse_scalar(text: str, where: str | None = None) -> UnitRational:
    """Parse ``"0.25"`` or ``"1/4"`` into an exact unit rational."""
    if isinstance(text, bool):
        raise ParseError(f"boolean is not a scalar{_at(where)}")
    if isinstance(text, int):
        value = Fraction(text)
    elif isinstance(text, str):
        if _DECIMAL.match(text):
            value = Fraction(text.strip())
        else:
            match = _RATIO.match(text)
            if not match:
                raise ParseError(f"cannot parse scalar {text!r}{_at(where)}")
            num, den = int(match.group(1)), int(match.group(2))
            if den == 0:
                raise ParseError(f"zero denominator in {text!r}{_at(where)}")
            value = Fraction(num, den)
    else:
        raise ParseError(
            f"scalar must be a decimal or 'p/q' string, got "
            f"{type(text).__name__}{_at(where)}"
        )
    if not 0 <= value <= 1:
        raise RangeError(value, where)
    return UnitRational(value)


def _at(where):
    return f" at {where}" if where else ""


def tnorm(a: Fraction, b: Fraction) -> UnitRational:
    """Product t-norm."""
    return UnitRational(a * b)


def residuum(a: Fraction, b: Fraction) -> UnitRational:
    """Goguen implication: the greatest ``z`` with ``a * z <= b``."""
    if a <= b:
        return ONE
    return UnitRational(b / a)


def negate(x: Fraction) -> UnitRational:
    return UnitRational(1 - x)


def eval_bipolar_row(
    a_plus: Sequence[Fraction],
    a_minus: Sequence[Fraction],
    x: Sequence[Fraction],
) -> UnitRational:
    """Value of ``max_j (a+_j * x_j) v (a-_j * (1 - x_j))``.

    An empty row evaluates to 0, the bottom of the lattice.
    """
    if not len(a_plus) == len(a_minus) == len(x):
        raise DimensionError(
            f"row lengths differ: a_plus={len(a_plus)}, "
            f"a_minus={len(a_minus)}, x={len(x)}"
        )
    best = Fraction(0)
    for ap, am, xj in zip(a_plus, a_minus, x):
        pos = ap * xj
        neg = am * (1 - xj)
        if pos > best:
            best = pos
        if neg > best:
            best = neg
    return UnitRational(best)


def eval_fre_row(
    a_plus: Sequence[Fraction],
    a_minus: Sequence[Fraction],
    x: Sequence[Fraction],
    y: Sequence[Fraction],
) -> UnitRational:
    """Value of ``max_j (a+_j * x_j) v (a-_j * y_j)`` with ``y`` free."""
    if not len(a_plus) == len(a_minus) == len(x) == len(y):
        raise DimensionError(
            f"row lengths differ: a_plus={len(a_plus)}, a_minus={len(a_minus)}, "
            f"x={len(x)}, y={len(y)}"
        )
    best = Fraction(0)
    for ap, am, xj, yj in zip(a_plus, a_minus, x, y):
        best = max(best, ap * xj, am * yj)
    return UnitRational(best)
