from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from apery_zeta.interval import RationalInterval

small = st.fractions(min_value=-50, max_value=50, max_denominator=1000)


@st.composite
def intervals(draw):
    a, b = draw(small), draw(small)
    return RationalInterval(min(a, b), max(a, b))


@st.composite
def interval_and_point(draw):
    iv = draw(intervals())
    t = draw(st.fractions(min_value=0, max_value=1, max_denominator=97))
    return iv, iv.lo + t * (iv.hi - iv.lo)


def test_rejects_inverted():
    with pytest.raises(ValueError):
        RationalInterval(Fraction(1), Fraction(0))


def test_sign_and_contains():
    assert RationalInterval(Fraction(1), Fraction(2)).sign() == 1
    assert RationalInterval(Fraction(-2), Fraction(-1)).sign() == -1
    assert RationalInterval(Fraction(-1), Fraction(1)).sign() is None
    assert RationalInterval.point(0).sign() == 0
    assert Fraction(3, 2) in RationalInterval(Fraction(1), Fraction(2))


def test_reciprocal_of_zero_straddler():
    with pytest.raises(ZeroDivisionError):
        RationalInterval(Fraction(-1), Fraction(1)).reciprocal()


@given(interval_and_point(), interval_and_point())
def test_arithmetic_is_sound(ax, by):
    a, x = ax
    b, y = by
    assert x + y in a + b
    assert x - y in a - b
    assert x * y in a * b
    assert abs(x) in abs(a)
    assert -x in -a
    if b.sign() in (1, -1):
        assert x / y in a / b


@given(interval_and_point(), st.integers(min_value=0, max_value=5))
def test_pow_is_sound(ax, e):
    a, x = ax
    assert x**e in a**e


@given(interval_and_point(), st.integers(min_value=1, max_value=64))
def test_round_out_and_sqrt(ax, bits):
    a, x = ax
    assert a.round_out(bits).contains(a)
    assume(a.lo >= 0)
    r = a.sqrt(bits)
    assert r.lo**2 <= x <= r.hi**2


def test_hull_intersect():
    a = RationalInterval(Fraction(0), Fraction(2))
    b = RationalInterval(Fraction(1), Fraction(3))
    assert a.intersect(b) == RationalInterval(Fraction(1), Fraction(2))
    assert a.hull(b) == RationalInterval(Fraction(0), Fraction(3))
    with pytest.raises(ValueError):
        a.intersect(RationalInterval(Fraction(5), Fraction(6)))
