from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from apery_zeta import zeta5, zeta23
from apery_zeta.polynomial import IntPolynomial
from apery_zeta.recurrence import (
    BitBudgetExceeded,
    RecurrenceError,
    RecurrenceSystem,
    SolutionTriple,
    run,
    solve,
    step,
    step_back,
)

SYS5 = zeta5.PRINTED.system()
SYS23 = zeta23.PRINTED.system()
small = st.fractions(min_value=-100, max_value=100, max_denominator=50)


def test_step_reproduces_table_row_3():
    state = SolutionTriple.from_initial(zeta5.INITIAL_Q, zeta5.INITIAL_P)
    nxt = step(SYS5, state)
    q3, p3 = nxt.current()
    assert nxt.n == 3
    assert p3 / q3 == Fraction(7682021239, 7408444032)


def test_zero_initial_data_stays_zero():
    zero = (0, 0, 0)
    states = list(run(SYS5, SolutionTriple.from_initial(zero), 10))
    assert all(s.current() == (0,) for s in states)


def test_zeta23_step_improves():
    q, p, _ = solve(SYS23, (zeta23.INITIAL_Q, zeta23.INITIAL_P, zeta23.INITIAL_PT), 3)
    from apery_zeta.zeta import zeta_enclosure

    z3 = zeta_enclosure(3, 30)
    assert abs(z3 - p[3] / q[3]).hi < abs(z3 - p[2] / q[2]).lo


def test_run_to_initial_index_is_unchanged():
    init = SolutionTriple.from_initial(zeta5.INITIAL_Q)
    states = list(run(SYS5, init, 2))
    assert states == [init]


def test_run_to_seven_matches_table():
    q, p = solve(SYS5, (zeta5.INITIAL_Q, zeta5.INITIAL_P), 7)
    assert p[7] / q[7] == Fraction(
        215903781003833520407770175189, 208214873150908926517286400000
    )


def test_run_below_initial_index():
    with pytest.raises(ValueError):
        list(run(SYS5, SolutionTriple.from_initial(zeta5.INITIAL_Q), 1))


def test_initial_data_needs_three_values():
    with pytest.raises(ValueError):
        SolutionTriple.from_initial((1, 2))


def test_vanishing_lead_is_reported():
    system = RecurrenceSystem(
        lead=IntPolynomial.x() - 4, c0=IntPolynomial([1]), c1=IntPolynomial([]), c2=IntPolynomial([]), name="t"
    )
    with pytest.raises(RecurrenceError) as info:
        solve(system, [(1, 1, 1)], 10)
    assert info.value.n == 4


def test_bit_budget():
    with pytest.raises(BitBudgetExceeded) as info:
        solve(SYS5, [zeta5.INITIAL_Q], 50, max_bits=64)
    assert info.value.bits > 64


@given(st.tuples(small, small, small), st.tuples(small, small, small), small)
def test_linearity(x, y, c):
    combo = tuple(c * a + b for a, b in zip(x, y))
    xs, ys, zs = solve(SYS5, (x, y, combo), 12)
    assert all(z == c * a + b for a, b, z in zip(xs, ys, zs))


@given(st.tuples(small, small, small), st.integers(min_value=1, max_value=15))
def test_step_back_inverts_step(x, k):
    state = SolutionTriple.from_initial(x)
    forward = [state]
    for _ in range(k):
        forward.append(step(SYS23, forward[-1]))
    back = forward[-1]
    for _ in range(k):
        back = step_back(SYS23, back)
    assert back == state


def test_residual_zero_on_solutions():
    q, p, pt = solve(SYS5, (zeta5.INITIAL_Q, zeta5.INITIAL_P, zeta5.INITIAL_PT), 20)
    for n in range(2, 20):
        assert SYS5.residual(q, n) == SYS5.residual(p, n) == SYS5.residual(pt, n) == 0
