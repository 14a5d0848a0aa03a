import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import is_square_bisect, isqrt_bisect, omega_min_bruteforce, p0_scan, pell_linear
from seshadri.bounds import (
    compute_m0,
    compute_p0,
    equality_case,
    full_report,
    multipoint_bound,
    steffens_bound,
    szemberg_bound,
)
from seshadri.exact import Ordering, SquareDegreeError, cmp_rational_vs_sqrt

NON_SQUARES = [n for n in range(2, 10**4 + 1) if not is_square_bisect(n)]


@pytest.mark.parametrize("n, expected", [(9, 3), (8, 2), (5, isqrt_bisect(5)), (1, 1)])
def test_steffens_bound(n, expected):
    assert steffens_bound(n) == expected


def test_steffens_rejects_zero():
    with pytest.raises(ValueError):
        steffens_bound(0)


@pytest.mark.parametrize("n", [2, 5, 8])
def test_p0_examples_match_scan(n):
    assert compute_p0(n) == p0_scan(n)


def test_p0_examples():
    assert compute_p0(8) == 1
    assert compute_p0(2) == 2
    assert compute_p0(5) == 3
    # float cross-check, display-level only
    assert math.ceil(1 / (2 * (math.sqrt(5) - 2))) == 3


def test_m0_examples():
    assert compute_m0(8) == 3
    assert compute_m0(2) == 3
    assert compute_m0(5) == 7


@pytest.mark.parametrize("fn", [compute_p0, compute_m0, szemberg_bound])
@pytest.mark.parametrize("n", [1, 4, 9, 10000])
def test_square_degree_rejected(fn, n):
    with pytest.raises(SquareDegreeError):
        fn(n)


@pytest.mark.parametrize("n, value", [(8, Fraction(8, 3)), (5, Fraction(15, 7)), (2, Fraction(4, 3))])
def test_szemberg_examples(n, value):
    assert szemberg_bound(n).value == value


@pytest.mark.parametrize("n", [2, 3, 5, 6, 7, 8, 10, 11, 12, 13, 50, 99])
def test_szemberg_is_brute_force_minimum(n):
    data = szemberg_bound(n)
    assert Fraction(data.p0, data.m0) == omega_min_bruteforce(n, max(20, 3 * data.p0))


def test_p0_window_and_preamble_sweep():
    for n in NON_SQUARES:
        a = isqrt_bisect(n)
        p0 = compute_p0(n)
        assert p0 == p0_scan(n)
        assert 4 * p0 * p0 * n > (2 * p0 * a + 1) ** 2
        assert p0 * p0 * n < (p0 * a + 1) ** 2
        value = szemberg_bound(n).value
        assert a < value
        assert cmp_rational_vs_sqrt(value, n) is Ordering.LESS


def test_p0_never_exceeds_alpha_plus_one():
    assert all(compute_p0(n) <= isqrt_bisect(n) + 1 for n in NON_SQUARES)


@pytest.mark.parametrize("n, r, expected", [(8, 2, 2), (10, 2, 2), (8, 1, 2), (1, 5, 0), (50, 2, 5)])
def test_multipoint_bound(n, r, expected):
    assert multipoint_bound(n, r) == expected


def test_multipoint_rejects_zero_points():
    with pytest.raises(ValueError):
        multipoint_bound(8, 0)


def test_multipoint_equals_steffens_for_one_point():
    assert all(multipoint_bound(n, 1) == steffens_bound(n) for n in range(1, 10**4 + 1))


def test_multipoint_monotone():
    for n in range(1, 1001):
        row = [multipoint_bound(n, r) for r in range(1, 51)]
        assert all(x >= y for x, y in zip(row, row[1:]))
    for r in range(1, 51):
        col = [multipoint_bound(n, r) for n in range(1, 1001)]
        assert all(x <= y for x, y in zip(col, col[1:]))


@given(st.integers(1, 10**30), st.integers(1, 10**6))
def test_multipoint_characterization(n, r):
    a = multipoint_bound(n, r)
    assert a * a * r <= n < (a + 1) * (a + 1) * r


@pytest.mark.parametrize("n, r, expected", [(8, 2, 2), (9, 1, 3), (10, 2, None), (12, 3, 2), (7, 1, None)])
def test_equality_case(n, r, expected):
    assert equality_case(n, r) == expected


def test_equality_case_grid():
    for r in range(1, 101):
        for d in range(1, 101):
            assert equality_case(r * d * d, r) == d


def test_report_n8():
    rep = full_report(8)
    assert rep.steffens == 2 and rep.strict and not rep.is_square
    assert rep.szemberg.value == Fraction(8, 3)
    assert rep.conjectural == Fraction(8, 3)
    assert rep.upper_bound_sq == 8 and rep.equality_case is None


def test_report_n9():
    rep = full_report(9)
    assert rep.steffens == 3 and not rep.strict and rep.is_square
    assert rep.szemberg is None and rep.pell is None
    assert rep.conjectural == Fraction(3)
    assert rep.equality_case == 3 and rep.exact_value == 3


def test_report_n7():
    rep = full_report(7)
    assert pell_linear(7, 100) == (8, 3)
    assert rep.steffens == 2
    assert rep.szemberg.value == Fraction(7, 3)
    assert rep.conjectural == Fraction(21, 8)


def test_report_multipoint():
    rep = full_report(8, 2)
    assert rep.steffens == 2 and rep.equality_case == 2
    assert rep.szemberg is None and rep.conjectural is None and not rep.strict
    rep = full_report(10, 2)
    assert rep.equality_case is None and rep.steffens == 2


@given(st.integers(2, 3000))
def test_report_ladder_sandwich(n):
    rep = full_report(n)
    if rep.is_square:
        assert rep.szemberg is None and rep.conjectural == rep.steffens
        return
    assert rep.steffens <= rep.szemberg.value <= rep.conjectural
    assert cmp_rational_vs_sqrt(rep.conjectural, n) is Ordering.LESS


def test_report_is_immutable():
    rep = full_report(5)
    with pytest.raises(Exception):
        rep.steffens = 7
