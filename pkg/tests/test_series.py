from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from apery_zeta.series import (
    Family,
    cross_products,
    linear_form_coeffs,
    partial_fractions,
    series_enclosure,
    summand,
    summand_spec,
)
from apery_zeta.zeta import zeta_enclosure


def test_summand_examples():
    assert summand(Family.R5, 0, 3) == Fraction(1, 3**5)
    assert summand(Family.R5, 1, 1) == 0
    assert summand(Family.R5_TILDE, 0, 2) == Fraction(-1, 8)
    with pytest.raises(ValueError):
        summand(Family.R5, 1, 0)


def test_partial_fractions_n0():
    pf = partial_fractions(Family.R5, 0)
    assert pf.A == ((0, 0, 0, 0, 1, 0),)


@settings(max_examples=40)
@given(
    st.sampled_from(list(Family)),
    st.integers(min_value=0, max_value=6),
    st.fractions(min_value=-30, max_value=30, max_denominator=40),
)
def test_partial_fractions_recombine(family, n, k):
    assume(all(k + j != 0 for j in range(n + 1)))
    spec = summand_spec(family, n)
    den = Fraction(1)
    for j in range(n + 1):
        den *= (k + j) ** spec.exponent
    direct = spec.prefactor * spec.numerator(k) / den
    assert partial_fractions(family, n).evaluate(k) == direct


@pytest.mark.parametrize(
    "family, n, expected",
    [
        (Family.R5, 1, (9, 33, 49)),
        (Family.R5, 2, (469, Fraction(6125, 4), Fraction(74463, 32))),
        (Family.R5_TILDE, 2, (552, 1764, Fraction(43085, 16))),
        (Family.R5, 0, (1, 0, 0)),
        (Family.R5_TILDE, 0, (0, -1, 0)),
        (Family.R23, 0, (-1, 0, 0)),
    ],
)
def test_linear_form_examples(family, n, expected):
    f = linear_form_coeffs(family, n)
    assert (f.u, f.w, f.v) == expected


def test_cross_products_examples():
    assert cross_products(1) == (42, Fraction(87, 2), Fraction(101, 2))
    assert cross_products(2)[0] == -17934
    assert cross_products(0)[0] == -1


@pytest.mark.parametrize("family", list(Family))
def test_vanishing_sums(family):
    for n in range(0, 12):
        pf = partial_fractions(family, n)
        for s in family.vanishing_orders:
            assert pf.column_sum(s) == 0


def test_series_enclosure_n0():
    enc = series_enclosure(Family.R5, 0, 8)
    assert enc.width <= Fraction(1, 10**8)
    assert enc.overlaps(zeta_enclosure(5, 8))
    assert Fraction("1.03692775") < enc.lo and enc.hi < Fraction("1.03692776")
    assert series_enclosure(Family.R5, 0, 20).overlaps(zeta_enclosure(5, 20))


@pytest.mark.parametrize("family", list(Family))
@pytest.mark.parametrize("n", [1, 2, 4])
def test_series_matches_linear_form(family, n):
    direct = series_enclosure(family, n, 15)
    form = linear_form_coeffs(family, n).value(40)
    assert direct.overlaps(form)


def test_signs_of_small_series():
    assert series_enclosure(Family.R5, 1, 6).sign() == 1
    assert series_enclosure(Family.R5_TILDE, 1, 6).sign() == -1
