from __future__ import annotations

import math
from fractions import Fraction

import pytest

from apery_zeta import zeta23
from apery_zeta.arith import log_abs
from apery_zeta.report import Status
from apery_zeta.series import Family, linear_form_coeffs


def test_coefficient_anchor():
    assert zeta23.PRINTED.poly_a0(1) == 368


def test_initial_data():
    seq = zeta23.sequences23(2)
    assert seq.q == (1, 14, 978)
    assert seq.p == (0, 17, Fraction(9405, 8))
    assert seq.pt == (0, 23, Fraction(6435, 4))


def test_integrality_examples():
    assert zeta23.integrality_check23(1).ok
    assert zeta23.integrality_check23(2).ok
    seq = zeta23.sequences23(2)
    assert 2**3 * seq.p[2] == 9405 and 2**2 * seq.pt[2] == 6435


def test_integrality_300():
    assert zeta23.integrality_check23(300).ok


def test_positivity_300():
    assert zeta23.positivity_check23(300).ok


def test_oracle_n0_coefficients():
    f = linear_form_coeffs(Family.R23, 0)
    assert (f.u, f.w, f.v) == (-1, 0, 0)


def test_oracle_n1():
    assert zeta23.oracle23(1).cross == (14, 17, 23)
    assert zeta23.oracle23(0).cross == (1, 0, 0)


def test_oracle_equivalence_15():
    assert zeta23.oracle_check23(15).ok


def test_roots():
    roots = zeta23.char_roots_mu_prime(12)
    assert Fraction("219.85478039") <= roots.real.lo and roots.real.hi <= Fraction("219.85478040")
    assert abs(log_abs(roots.pair_modulus.midpoint) - (-1.31018925)) < 1e-6
    # |mu1|^2 mu3 = 16
    assert (roots.pair_modulus**2 * roots.real).contains(16)


def test_convergence_band():
    assert zeta23.convergence_ratio_check().ok


def test_single_step_ratios_oscillate():
    # the complex pair makes individual step ratios leave the band
    report = zeta23.convergence_ratio_check(window=1)
    assert report.status is Status.FAIL
    assert report.counterexample["window"] == 1


def test_convergence_rejects_bad_window():
    with pytest.raises(ValueError):
        zeta23.convergence_ratio_check(50, 52, window=5)


def test_compute_like_values():
    approx = zeta23.approximation23(8)
    assert approx.error3.hi < Fraction(1, 10**20)
    assert approx.error2.hi < Fraction(1, 10**20)


def test_perturbed_recursion_breaks_oracle():
    bad = zeta23.PRINTED.perturbed("a1", 0)
    assert zeta23.oracle_check23(5, bad).status is Status.FAIL


def test_rate_report_small():
    assert zeta23.rate_report23(1).rates["q"] == pytest.approx(math.log(14))
