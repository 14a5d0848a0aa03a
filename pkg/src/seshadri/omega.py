"""Brute-force oracles over the lattice region ``m(m-1) + 1 <= N p^2``.

Nothing here calls the closed forms in :mod:`seshadri.bounds` except
:func:`verify_lemma`, whose job is to compare the two.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import require_degree


@dataclass(frozen=True, order=True)
class OmegaPoint:
    p: int
    m: int


@dataclass(frozen=True)
class OracleResult:
    minimum: Fraction
    argmin: tuple[OmegaPoint, ...]
    p_max: int
    # multi-point runs only: the multiplicity tuples behind each argmin entry
    tuples: tuple[tuple[int, ...], ...] = ()


def _in_region(n: int, p: int, m: int) -> bool:
    return m * (m - 1) + 1 <= n * p * p


def omega_contains(n: int, pt: OmegaPoint) -> bool:
    return pt.p >= 1 and pt.m >= 1 and _in_region(n, pt.p, pt.m)


def max_mult(n: int, p: int) -> int:
    """Largest ``m`` with ``m(m-1) + 1 <= N p^2``, by integer bisection."""
    require_degree(n)
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    budget = n * p * p
    lo, hi = 1, 2
    while _in_region(n, p, hi):
        hi *= 2
    # invariant: lo admissible, hi not
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _in_region(n, p, mid):
            lo = mid
        else:
            hi = mid
    disc = 4 * budget - 3
    assert (2 * lo - 1) ** 2 <= disc < (2 * lo + 1) ** 2, f"m_p bracket fails for N={n}, p={p}"
    return lo


def omega_min(n: int, p_max: int) -> OracleResult:
    """Minimum of ``p / m`` over the region with ``p <= p_max``.

    For fixed ``p`` the ratio is minimized by the largest admissible ``m``,
    so only ``(p, max_mult(N, p))`` is enumerated.
    """
    require_degree(n, non_square=True, minimum=2)
    if p_max < 1:
        raise ValueError(f"p_max must be >= 1, got {p_max}")
    best: Fraction | None = None
    argmin: list[OmegaPoint] = []
    for p in range(1, p_max + 1):
        m = max_mult(n, p)
        ratio = Fraction(p, m)
        if best is None or ratio < best:
            best, argmin = ratio, [OmegaPoint(p, m)]
        elif ratio == best:
            argmin.append(OmegaPoint(p, m))
    return OracleResult(minimum=best, argmin=tuple(argmin), p_max=p_max)


def _multiplicity_tuples(budget: int, r: int, cap: int, strict: bool):
    """Non-increasing ``(m_1, ..., m_r)``, all ``>= 1``, with
    ``m_1^2 + ... + m_{r-1}^2 + m_r(m_r - 1) (+1 if strict) <= budget``."""
    slack = budget - (1 if strict else 0)

    def rec(prefix: list[int], used: int, upper: int):
        i = len(prefix)
        if i == r - 1:
            for m in range(min(upper, cap), 0, -1):
                if used + m * (m - 1) <= slack:
                    yield (*prefix, m)
            return
        # each later square slot costs >= 1, the last slot >= 0
        reserve = r - 2 - i
        for m in range(1, min(upper, cap) + 1):
            cost = used + m * m
            if cost + reserve > slack:
                break
            prefix.append(m)
            yield from rec(prefix, cost, m)
            prefix.pop()

    yield from rec([], 0, cap)


def multipoint_omega_min(n: int, r: int, p_max: int, *, strict: bool = False) -> OracleResult:
    """Minimum of ``p / (m_1 + ... + m_r)`` under the Xu-type constraint.

    ``strict=False`` is the literal ``C^2 >= m_1^2 + ... + m_r(m_r - 1)``
    with ``C^2 = N p^2``; ``strict=True`` adds ``+1`` like the one-point
    region, and with ``r = 1`` reproduces :func:`omega_min`.
    """
    require_degree(n)
    if r < 1:
        raise ValueError(f"point count must be >= 1, got {r}")
    if p_max < 1:
        raise ValueError(f"p_max must be >= 1, got {p_max}")
    best: Fraction | None = None
    argmin: list[OmegaPoint] = []
    witnesses: list[tuple[int, ...]] = []
    for p in range(1, p_max + 1):
        budget = n * p * p
        # Any admissible tuple has m_1(m_1 - 1) <= m_1^2 <= N p^2 <= N r p^2
        # (for r = 1, m_1(m_1 - 1) + 1 <= N p^2 directly), so
        # m_1 <= max_mult(N r, p) + 1 and the capped search is exhaustive.
        cap = max_mult(n * r, p) + 1
        for tup in _multiplicity_tuples(budget, r, cap, strict):
            total = sum(tup)
            ratio = Fraction(p, total)
            if best is None or ratio < best:
                best, argmin, witnesses = ratio, [OmegaPoint(p, total)], [tup]
            elif ratio == best:
                argmin.append(OmegaPoint(p, total))
                witnesses.append(tup)
    if best is None:
        raise ValueError(f"no admissible tuple for N={n}, r={r}, p_max={p_max}")
    order = sorted(range(len(argmin)), key=lambda i: (argmin[i], witnesses[i]))
    return OracleResult(
        minimum=best,
        argmin=tuple(argmin[i] for i in order),
        p_max=p_max,
        tuples=tuple(witnesses[i] for i in order),
    )


def default_p_max(p0: int) -> int:
    return max(50, 10 * p0)


@dataclass
class LemmaCheck:
    n: int
    p_max: int
    p0: int
    m0: int
    oracle: OracleResult
    min_matches: bool
    closed_form_in_region: bool
    pointwise_ok: bool
    failing_p: list[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.min_matches and self.closed_form_in_region and self.pointwise_ok

    def witness(self) -> str | None:
        if self.passed:
            return None
        closed = Fraction(self.p0, self.m0)
        if not self.min_matches:
            return f"N={self.n}: oracle minimum {self.oracle.minimum} != p0/m0 = {closed}"
        if not self.closed_form_in_region:
            return f"N={self.n}: (p0, m0) = ({self.p0}, {self.m0}) outside the region"
        p = self.failing_p[0]
        return f"N={self.n}: p={p} gives p/m_p = {Fraction(p, max_mult(self.n, p))} < {closed}"


def verify_lemma(n: int, p_max: int | None = None) -> LemmaCheck:
    """Compare the oracle minimum with the closed form ``p0 / m0``."""
    from .bounds import szemberg_bound

    data = szemberg_bound(n)
    if p_max is None:
        p_max = default_p_max(data.p0)
    oracle = omega_min(n, p_max)
    closed = Fraction(data.p0, data.m0)
    failing = [p for p in range(1, p_max + 1) if Fraction(p, max_mult(n, p)) < closed]
    return LemmaCheck(
        n=n,
        p_max=p_max,
        p0=data.p0,
        m0=data.m0,
        oracle=oracle,
        min_matches=(oracle.minimum == closed) if p_max >= data.p0 else oracle.minimum >= closed,
        closed_form_in_region=omega_contains(n, OmegaPoint(data.p0, data.m0)),
        pointwise_ok=not failing,
        failing_p=failing,
    )
