from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fareytree.exact_rational import (
    INFINITY,
    INT64_MAX,
    ZERO,
    ExtendedRational,
    compare,
    make,
    mediant,
    parse,
    reciprocal,
)


def test_make_reduces():
    assert make(2, 4) == ExtendedRational(1, 2)
    assert make(2, 4).as_tuple() == (1, 2)


def test_make_infinity_and_zero():
    assert make(3, 0) == INFINITY and make(3, 0).as_tuple() == (1, 0)
    assert make(0, 7) == ZERO and make(0, 7).as_tuple() == (0, 1)
    assert INFINITY.is_infinite and not INFINITY.is_zero
    assert ZERO.is_zero and not ZERO.is_infinite


@pytest.mark.parametrize("p,q", [(0, 0), (-1, 2), (1, -2)])
def test_make_rejects(p, q):
    with pytest.raises(ValueError):
        make(p, q)


def test_overflow_guard():
    make(INT64_MAX, 1)
    with pytest.raises(OverflowError):
        make(INT64_MAX + 1, 1)


def test_immutable():
    x = make(1, 2)
    with pytest.raises(AttributeError):
        x.num = 3


@pytest.mark.parametrize(
    "x,y,want",
    [((1, 2), (3, 1), -1), ((1, 0), (3, 1), 1), ((3, 2), (3, 2), 0), ((0, 1), (1, 0), -1), ((1, 0), (1, 0), 0)],
)
def test_compare(x, y, want):
    assert compare(make(*x), make(*y)) == want


def test_reciprocal():
    assert reciprocal(ZERO) == INFINITY
    assert reciprocal(INFINITY) == ZERO
    assert reciprocal(make(2, 3)) == make(3, 2)


def test_mediant():
    assert mediant(ZERO, INFINITY) == make(1, 1)
    assert mediant(make(1, 1), make(3, 2)) == make(4, 3)
    assert mediant(make(1, 2), make(1, 1)) == make(2, 3)
    with pytest.raises(ValueError):
        mediant(make(1, 1), make(1, 1))


def test_parse():
    assert parse("5/4") == make(5, 4)
    assert parse("6/8") == make(3, 4)
    assert parse("3") == make(3, 1)
    assert parse("1/0") == INFINITY
    for bad in ("1.5", "a/b", "", "1/2/3"):
        with pytest.raises(ValueError):
            parse(bad)


def test_str_round_trip():
    for x in (ZERO, INFINITY, make(7, 3)):
        assert parse(str(x)) == x


positive = st.tuples(st.integers(0, 10**9), st.integers(0, 10**9)).filter(lambda t: t != (0, 0))


def _frac(t):
    return None if t[1] == 0 else Fraction(t[0], t[1])


@given(positive, positive)
def test_compare_matches_fraction(x, y):
    fx, fy = _frac(x), _frac(y)
    if fx is None and fy is None:
        want = 0
    elif fx is None:
        want = 1
    elif fy is None:
        want = -1
    else:
        want = (fx > fy) - (fx < fy)
    assert compare(make(*x), make(*y)) == want


@given(positive, positive)
def test_mediant_strictly_between(x, y):
    a, b = sorted([make(*x), make(*y)])
    if a == b:
        return
    c = mediant(a, b)
    assert a < c < b


@given(positive)
def test_reciprocal_involution(x):
    v = make(*x)
    assert reciprocal(reciprocal(v)) == v


@given(positive)
def test_stored_reduced(x):
    from math import gcd

    v = make(*x)
    assert gcd(v.num, v.den) == 1
