from __future__ import annotations

import math
from fractions import Fraction

import pytest

from apery_zeta import zeta5
from apery_zeta.interval import RationalInterval
from apery_zeta.report import Status
from apery_zeta.zeta import zeta_enclosure


def test_coefficient_anchors():
    assert zeta5.coeff_a(0, 1) == 9898
    assert zeta5.coeff_a(0, 0) == -2871
    assert zeta5.coeff_a(2, 0) == -44541
    assert zeta5.PRINTED.poly_a0.degree == 3
    assert zeta5.PRINTED.poly_a1.degree == 9
    assert zeta5.PRINTED.poly_a2.degree == 8


def test_initial_data():
    seq = zeta5.sequences(2)
    assert seq.q == (-1, 42, -17934)
    assert seq.p == (0, Fraction(87, 2), Fraction(-1190161, 64))
    assert seq.pt == (0, Fraction(101, 2), Fraction(-344923, 16))


def test_table_fractions():
    seq = zeta5.sequences(7)
    for n in range(8):
        fraction = zeta5.PUBLISHED_TABLE[n][0]
        assert str(seq.p[n] / seq.q[n]) == fraction


def test_q3_against_table_denominator():
    q3 = zeta5.sequences(3).q[3]
    assert (zeta5.sequences(3).p[3] / q3).denominator == 7408444032


@pytest.mark.parametrize(
    "n, fraction, truncated",
    [(0, "0", "1.036927755"), (1, "29/28", "0.001213469"), (2, "24289/23424", "0.000000182")],
)
def test_approximation_small(n, fraction, truncated):
    approx = zeta5.approximation(n)
    assert str(approx.value) == fraction
    cell = Fraction(truncated)
    assert cell <= approx.error.lo and approx.error.hi < cell + Fraction(1, 10**9)


def test_linear_form_examples():
    forms = zeta5.linear_forms(2)
    assert forms[0].l.contains(-zeta_enclosure(5, 30))
    assert forms[1].l.sign() == 1 and abs(float(forms[1].l.midpoint) - 0.0509) < 1e-3
    assert forms[1].lt.sign() == -1 and abs(float(forms[1].lt.midpoint) + 0.0136) < 1e-3


def test_mu_roots_printed_digits():
    cells = [
        RationalInterval(Fraction("0.33753726"), Fraction("0.33753727")),
        RationalInterval(Fraction("-2368.31752214"), Fraction("-2368.31752213")),
    ]
    coarse, fine = zeta5.char_roots_mu(8), zeta5.char_roots_mu(12)
    for i, cell in zip((1, 2), cells):
        # 8-digit enclosures sit on a binary grid, so they may poke out of the decimal cell
        assert coarse[i].width <= Fraction(1, 10**8) and coarse[i].overlaps(cell)
        assert cell.contains(fine[i])
    assert (fine[0] * fine[1] * fine[2]).contains(16)


def test_rate_report_small_n():
    report = zeta5.rate_report(1)
    assert report.rates["q"] == pytest.approx(math.log(42))


def test_rates_approach_limits():
    # log|x_n|/n carries a (log n)/n correction, so only the trend is asserted here
    devs = [zeta5.rate_report(n).deviation("q") for n in (50, 100, 200, 400)]
    assert devs == sorted(devs, reverse=True)
    assert devs[-1] < 0.06


@pytest.mark.parametrize("n_max", [1, 2, 300])
def test_integrality(n_max):
    assert zeta5.integrality_check(n_max).status is Status.PASS


def test_integrality_example_values():
    seq = zeta5.sequences(2)
    assert 2 * 2**5 * seq.p[2] == -1190161


def test_alternation():
    assert zeta5.alternation_check(300).ok


def test_signs():
    assert zeta5.sign_check(200).ok


def test_table_check():
    assert zeta5.table_check().ok


def test_perturbed_integrality_fails():
    # guards that the check can fail at all
    bad = zeta5.PRINTED.perturbed("a2", 0)
    report = zeta5.integrality_check(20, bad)
    assert report.status is Status.FAIL
    assert report.counterexample["n"] <= 20
