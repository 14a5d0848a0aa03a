"""Closed-form lower/upper bounds on one- and multi-point Seshadri constants.

All bounds are functions of the degree ``N = L^2`` and the point count ``r``.
The fractional part ``beta = sqrt(N) - alpha`` is never formed; every
statement about it is compiled to a squared integer inequality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import Ordering, cmp_rational_vs_sqrt, is_square, isqrt, require_degree
from .pell import PellSolution, conjectural_bound, pell_primitive


@dataclass(frozen=True)
class SzembergData:
    p0: int
    m0: int
    value: Fraction


@dataclass(frozen=True)
class BoundReport:
    """The bound ladder for one ``(N, r)``.

    ``conjectural`` is the Pell-derived value and is never a proven bound.
    The upper bound ``sqrt(N)`` is carried symbolically as ``upper_bound_sq``.
    """

    n: int
    r: int
    is_square: bool
    steffens: int
    strict: bool
    szemberg: SzembergData | None
    pell: PellSolution | None
    conjectural: Fraction | None
    upper_bound_sq: int
    equality_case: int | None

    @property
    def exact_value(self) -> int | None:
        """``eps(L; r)`` when it is known exactly (degree ``r * d^2``)."""
        return self.equality_case


def _check_r(r: int) -> int:
    if isinstance(r, bool) or not isinstance(r, int):
        raise TypeError(f"point count must be an integer, got {r!r}")
    if r < 1:
        raise ValueError(f"point count must be >= 1, got {r}")
    return r


def steffens_bound(n: int) -> int:
    require_degree(n)
    return isqrt(n)


def _beta_above_half(k: int, n: int, alpha: int) -> bool:
    # k*beta > 1/2  <=>  2k*sqrt(N) > 2k*alpha + 1
    return 4 * k * k * n > (2 * k * alpha + 1) ** 2


def _beta_below_one(k: int, n: int, alpha: int) -> bool:
    # k*beta < 1  <=>  k*sqrt(N) < k*alpha + 1
    return k * k * n < (k * alpha + 1) ** 2


def compute_p0(n: int) -> int:
    """Least ``k >= 1`` with ``k * beta > 1/2``."""
    require_degree(n, non_square=True, minimum=2)
    alpha = isqrt(n)
    k = 1
    # beta > 1/(2 alpha + 1) > 1/(2(alpha + 1)), so the scan stops by alpha + 1
    while not _beta_above_half(k, n, alpha):
        k += 1
        assert k <= alpha + 1, f"p0 scan overran alpha + 1 for N={n}"
    assert _beta_below_one(k, n, alpha), f"p0 * beta >= 1 for N={n}"
    return k


def compute_m0(n: int) -> int:
    """``ceil(p0 * sqrt(N))``, which equals ``p0 * alpha + 1``."""
    p0 = compute_p0(n)
    m0 = p0 * isqrt(n) + 1
    assert (m0 - 1) ** 2 < p0 * p0 * n < m0 * m0, f"m0 is not ceil(p0 sqrt N) for N={n}"
    return m0


def szemberg_bound(n: int) -> SzembergData:
    """Improved one-point lower bound ``p0 * N / m0`` for non-square ``N``."""
    p0 = compute_p0(n)
    m0 = p0 * isqrt(n) + 1
    assert (m0 - 1) ** 2 < p0 * p0 * n < m0 * m0
    value = Fraction(p0 * n, m0)
    assert isqrt(n) < value, f"improved bound does not beat Steffens for N={n}"
    assert cmp_rational_vs_sqrt(value, n) is Ordering.LESS, f"improved bound reaches sqrt(N) for N={n}"
    return SzembergData(p0=p0, m0=m0, value=value)


def multipoint_bound(n: int, r: int) -> int:
    """Largest ``a`` with ``a^2 * r <= N``."""
    require_degree(n)
    _check_r(r)
    a = isqrt(n // r)
    assert a * a * r <= n < (a + 1) * (a + 1) * r
    return a


def equality_case(n: int, r: int) -> int | None:
    """``d`` when ``N = r * d^2``, else ``None``."""
    require_degree(n)
    _check_r(r)
    q, rem = divmod(n, r)
    if rem or not is_square(q):
        return None
    return isqrt(q)


def full_report(n: int, r: int = 1) -> BoundReport:
    require_degree(n)
    _check_r(r)
    square = is_square(n)
    steffens = multipoint_bound(n, r)
    szemberg = pell = conjectural = None
    if r == 1:
        if not square:
            szemberg = szemberg_bound(n)
            pell = pell_primitive(n)
        conjectural = conjectural_bound(n)
    report = BoundReport(
        n=n,
        r=r,
        is_square=square,
        steffens=steffens,
        strict=(r == 1 and not square),
        szemberg=szemberg,
        pell=pell,
        conjectural=conjectural,
        upper_bound_sq=n,
        equality_case=equality_case(n, r),
    )
    _check_ladder(report)
    return report


def _check_ladder(rep: BoundReport) -> None:
    if rep.szemberg is not None:
        assert rep.steffens <= rep.szemberg.value <= rep.conjectural, f"ladder out of order for N={rep.n}"
        assert cmp_rational_vs_sqrt(rep.conjectural, rep.n) is Ordering.LESS
    if rep.equality_case is not None:
        assert rep.steffens == rep.equality_case
