"""
Rational utility functions for bfs-hvs.

Contains helpers for parsing, validating and formatting exact grades.
"""

import re
from fractions import Fraction
from typing import Iterable, Union

from ...exceptions import DomainError

GradeLike = Union[Fraction, int, str, float]

_RATIONAL_RE = re.compile(r"^-?\d+(?:\.\d+)?(?:/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """
    Parse a decimal or ``p/q`` literal into an exact fraction.

    Args:
        text: Literal such as ``0.3``, ``-2/5`` or ``1``

    Returns:
        The exact value in lowest terms

    Raises:
        ValueError: If the literal is not a rational number
    """
    literal = text.strip()
    if not _RATIONAL_RE.match(literal):
        raise ValueError(f"Not a rational literal: '{text}'")
    if "/" in literal:
        numerator, denominator = literal.split("/")
        if int(denominator) == 0:
            raise ValueError(f"Zero denominator in '{text}'")
        return Fraction(numerator) / Fraction(denominator)
    return Fraction(literal)


def to_grade(value: GradeLike) -> Fraction:
    """Coerce a literal, integer, fraction or float into an exact grade."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DomainError(f"Booleans are not grades: {value!r}", value=value)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        # repr keeps the shortest decimal, so 0.3 stays 3/10
        return parse_rational(repr(value))
    try:
        return parse_rational(value)
    except ValueError as e:
        raise DomainError(str(e), value=value) from e


def format_rational(value: Fraction) -> str:
    """Format a grade as ``p`` or ``p/q`` in lowest terms."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def check_positive_grade(value: Fraction, where: str = "grade") -> Fraction:
    if not 0 <= value <= 1:
        raise DomainError(
            f"Positive {where} {format_rational(value)} outside [0, 1]", value=value
        )
    return value


def check_negative_grade(value: Fraction, where: str = "grade") -> Fraction:
    if not -1 <= value <= 0:
        raise DomainError(
            f"Negative {where} {format_rational(value)} outside [-1, 0]", value=value
        )
    return value


def check_thresholds(alpha: Fraction, beta: Fraction) -> None:
    """Validate a level pair: alpha in (0, 1] and beta in [-1, 0)."""
    if not 0 < alpha <= 1:
        raise DomainError(
            f"Level alpha {format_rational(alpha)} outside (0, 1]", value=alpha
        )
    if not -1 <= beta < 0:
        raise DomainError(
            f"Level beta {format_rational(beta)} outside [-1, 0)", value=beta
        )


def join(values: Iterable[Fraction], default: Fraction) -> Fraction:
    """Supremum of a finite family, ``default`` when it is empty."""
    return max(values, default=default)


def meet(values: Iterable[Fraction], default: Fraction) -> Fraction:
    """Infimum of a finite family, ``default`` when it is empty."""
    return min(values, default=default)
