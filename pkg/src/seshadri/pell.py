"""Continued fractions of sqrt(N) and the fundamental solution of l^2 - N k^2 = 1."""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction

from .exact import is_square, isqrt, require_degree


@dataclass(frozen=True)
class CFExpansion:
    """``sqrt(N) = [a0; period, period, ...]``."""

    n: int
    a0: int
    period: tuple[int, ...]

    @property
    def period_length(self) -> int:
        return len(self.period)

    def partial_quotients(self) -> Iterator[int]:
        yield self.a0
        yield from itertools.cycle(self.period)


@dataclass(frozen=True)
class PellSolution:
    n: int
    l0: int
    k0: int

    def residual(self) -> int:
        return self.l0 * self.l0 - self.n * self.k0 * self.k0


def cf_expand(n: int) -> CFExpansion:
    """Periodic expansion of sqrt(n) by the quadratic-surd recurrence.

    The period is closed by the ``a == 2*a0`` criterion and, independently,
    by the surd state ``(m, d)`` returning to its first periodic value. The two
    must agree.
    """
    require_degree(n, non_square=True, minimum=2)
    a0 = isqrt(n)
    m, d, a = 0, 1, a0
    period: list[int] = []
    first_state = None
    seen: set[tuple[int, int]] = set()
    while True:
        m = d * a - m
        num = n - m * m
        if num % d:
            raise ArithmeticError(f"inexact surd step for N={n}: ({num}) / {d}")
        d = num // d
        a = (a0 + m) // d
        state = (m, d)
        if first_state is None:
            first_state = state
        elif state == first_state or state in seen:
            raise ArithmeticError(f"surd state repeated before a = 2*a0 for N={n}")
        seen.add(state)
        period.append(a)
        if a == 2 * a0:
            break

    # backstop: one more step must land back on the first periodic state
    m_next = d * a - m
    d_next = (n - m_next * m_next) // d
    if (m_next, d_next) != first_state:
        raise ArithmeticError(f"period end criteria disagree for N={n}")
    return CFExpansion(n=n, a0=a0, period=tuple(period))


def convergents(cf: CFExpansion, count: int) -> list[Fraction]:
    """First ``count`` convergents ``h_i / k_i`` of the expansion."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    return [Fraction(h, k) for h, k in convergent_pairs(cf, count)]


def convergent_pairs(cf: CFExpansion, count: int) -> list[tuple[int, int]]:
    h_prev, h = 0, 1
    k_prev, k = 1, 0
    out = []
    for a in itertools.islice(cf.partial_quotients(), count):
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
        # consecutive convergents have determinant +-1, hence each is reduced
        assert abs(h * k_prev - h_prev * k) == 1
        out.append((h, k))
    return out


def pell_primitive(n: int) -> PellSolution:
    """Minimal positive solution of ``l^2 - n k^2 = 1``.

    Read off the convergent at index ``len-1`` (even period length) or
    ``2*len-1`` (odd period length).
    """
    cf = cf_expand(n)
    length = cf.period_length
    index = length - 1 if length % 2 == 0 else 2 * length - 1
    pairs = convergent_pairs(cf, index + 1)
    l0, k0 = pairs[index]
    sol = PellSolution(n=n, l0=l0, k0=k0)
    if sol.residual() != 1:
        raise ArithmeticError(f"Pell identity fails for N={n}: {l0}^2 - {n}*{k0}^2 = {sol.residual()}")
    # every positive solution is a convergent, so checking the earlier ones
    # establishes minimality
    for h, k in pairs[:index]:
        if h * h - n * k * k == 1:
            raise ArithmeticError(f"smaller Pell solution ({h}, {k}) precedes the period rule for N={n}")
    return sol


def conjectural_bound(n: int) -> Fraction:
    """``sqrt(n)`` for square ``n``, otherwise ``n * k0 / l0``."""
    require_degree(n)
    if is_square(n):
        return Fraction(isqrt(n))
    sol = pell_primitive(n)
    return Fraction(n * sol.k0, sol.l0)
