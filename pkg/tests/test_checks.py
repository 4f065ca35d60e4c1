from __future__ import annotations

from fractions import Fraction

import pytest

from apery_zeta import checks
from apery_zeta.approx import RateReport
from apery_zeta.report import Status


def test_truncation_cells():
    assert checks.truncation_cell("0.33753726").lo == Fraction("0.33753726")
    assert checks.truncation_cell("-2368.31752213").hi == Fraction("-2368.31752213")
    assert checks.truncation_cell("-2368.31752213").width == Fraction(1, 10**8)


def test_inclusions():
    assert checks.inclusion_check(25).ok


def test_structure():
    assert checks.structure_check(25).ok


def test_oracle5():
    assert checks.oracle_check5(25).ok


def test_root_checks():
    assert checks.mu_printed_check().ok
    assert checks.mu_prime_check().ok


def test_rate_check_logic():
    good = RateReport(10, {"q": 1.0}, {"q": 1.01})
    bad = RateReport(10, {"q": 1.0, "l": -2.0}, {"q": 1.01, "l": -1.5})
    unknown = RateReport(10, {"l": None}, {"l": -1.0})
    assert checks.rate_check("t", good).ok
    report = checks.rate_check("t", bad)
    assert report.status is Status.FAIL and report.counterexample["quantity"] == "l"
    assert checks.rate_check("t", unknown).status is Status.INDETERMINATE


def test_unknown_selector():
    with pytest.raises(ValueError):
        checks.suite("nonsense", checks.Plan())


def test_reports_sorted():
    reports = checks.run_selectors(["roots", "oracle"], checks.Plan("zeta5", 5))
    names = [r.check for r in reports]
    assert names == sorted(names)


def test_overall():
    from apery_zeta.report import VerificationReport

    p = VerificationReport("a", None, Status.PASS)
    i = VerificationReport("b", None, Status.INDETERMINATE)
    f = VerificationReport("c", None, Status.FAIL, {"n": 1})
    assert checks.overall([p]) is Status.PASS
    assert checks.overall([p, i]) is Status.INDETERMINATE
    assert checks.overall([p, i, f]) is Status.FAIL
