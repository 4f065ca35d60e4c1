from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from apery_zeta.interval import RationalInterval
from apery_zeta.report import Status, VerificationReport, first_failure, jsonable


def test_fail_needs_counterexample():
    with pytest.raises(ValueError):
        VerificationReport("x", (1, 2), Status.FAIL)


def test_jsonable():
    assert jsonable(Fraction(3, 4)) == "3/4"
    assert jsonable(2**60) == str(2**60)
    assert jsonable(RationalInterval(Fraction(0), Fraction(1, 2))) == {"lo": "0", "hi": "1/2"}
    assert jsonable(Status.PASS) == "PASS"


@given(
    st.text(min_size=1, max_size=20),
    st.tuples(st.integers(0, 500), st.integers(0, 500)),
    st.sampled_from(list(Status)),
    st.floats(min_value=0, max_value=1e4),
)
def test_round_trip(check, rng, status, seconds):
    counter = {"n": 3, "value": "1/2"} if status is not Status.PASS else None
    report = VerificationReport(check, rng, status, counter, seconds)
    data = json.loads(report.to_json())
    back = VerificationReport.from_dict(data)
    assert back.to_dict() == report.to_dict()


def test_first_failure():
    ok = first_failure("c", (1, 5), range(1, 6), lambda n: None)
    assert ok.ok
    bad = first_failure("c", (1, 5), range(1, 6), lambda n: {"n": n} if n == 3 else None)
    assert bad.status is Status.FAIL and bad.counterexample == {"n": 3}
