"""Exact integer/rational kernel.

Every decision in the package goes through the helpers here; no float ever
reaches a comparison.  Rationals are :class:`fractions.Fraction`, which keeps
values reduced with a positive denominator.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction

__all__ = [
    "Fraction",
    "Ordering",
    "SquareDegreeError",
    "cmp_rational_vs_sqrt",
    "isqrt",
    "is_square",
    "require_degree",
]


class SquareDegreeError(ValueError):
    """Raised when an operation needs a non-square degree N."""

    def __init__(self, n: int):
        super().__init__(f"N = {n} is a perfect square; the operation needs a non-square degree")
        self.n = n


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def isqrt(n: int) -> int:
    """Largest ``a`` with ``a*a <= n``."""
    if n < 0:
        raise ValueError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def is_square(n: int) -> bool:
    a = isqrt(n)
    return a * a == n


def cmp_rational_vs_sqrt(q: Fraction | int, n: int) -> Ordering:
    """Order of a non-negative rational ``q`` relative to ``sqrt(n)``.

    Both sides are non-negative, so comparing ``num**2`` with ``n * den**2``
    preserves the order.
    """
    q = Fraction(q)
    if q < 0:
        raise ValueError(f"expected q >= 0, got {q}")
    if n < 0:
        raise ValueError(f"expected N >= 0, got {n}")
    lhs = q.numerator * q.numerator
    rhs = n * q.denominator * q.denominator
    if lhs < rhs:
        return Ordering.LESS
    if lhs > rhs:
        return Ordering.GREATER
    return Ordering.EQUAL


def require_degree(n: int, *, non_square: bool = False, minimum: int = 1) -> int:
    """Validate a degree argument and return it as an ``int``."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"degree must be an integer, got {n!r}")
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    if non_square and is_square(n):
        raise SquareDegreeError(n)
    if n < minimum:
        raise ValueError(f"degree must be >= {minimum}, got {n}")
    return n
