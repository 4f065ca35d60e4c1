from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from apery_zeta import gosper
from apery_zeta.zeta import zeta_enclosure


def test_factor_examples():
    f1 = gosper.factor(1)
    assert f1.rows[0] == (Fraction(-1, 6), Fraction(1, 6), 1)
    assert f1.rows[1] == (0, Fraction(-1, 6), Fraction(5, 4))
    assert f1.rows[2] == (0, 0, 1)
    assert gosper.factor(2)[0, 0] == Fraction(-1, 5)
    with pytest.raises(ValueError):
        gosper.factor(0)


def test_prefix_one():
    m = gosper.prefix_product(1)
    assert m.column3 == (1, Fraction(5, 4), 1)


def test_prefix_hundred_close():
    m = gosper.prefix_product(100)
    z5, z3 = zeta_enclosure(5, 60), zeta_enclosure(3, 60)
    bound = Fraction(1, 10**40)
    assert abs(z5 - m[0, 2]).hi < bound
    assert abs(z3 - m[1, 2]).hi < bound


@settings(max_examples=15)
@given(st.integers(min_value=1, max_value=120))
def test_shape_and_diagonal(N):
    m = gosper.prefix_product(N)
    assert m.upper_triangular and m[2, 2] == 1
    nxt = m @ gosper.factor(N + 1)
    # each factor scales the diagonal by n/(2(2n+1)), strictly below 1/4
    assert abs(nxt[0, 0]) < abs(m[0, 0]) / 4
    assert Fraction(N + 1, 2 * (2 * N + 3)) < Fraction(1, 4)


@settings(max_examples=15)
@given(st.integers(min_value=1, max_value=80), st.integers(min_value=1, max_value=80))
def test_tree_equals_fold(a, b):
    N = max(a, b)
    assert gosper.tree_product(1, N) == gosper.prefix_product(N)


def test_monotone_improvement():
    assert gosper.gosper_check(200).ok


def test_compare_trivial():
    report = gosper.compare_with_recursion(1, 0)
    assert report.recursion_digits["zeta5"] == 0
    assert report.gosper_digits["zeta5"] <= 1


@pytest.mark.parametrize("N, n", [(50, 10), (100, 20)])
def test_recursion_ahead(N, n):
    assert gosper.compare_with_recursion(N, n).leader == "recursion"


def test_small_comparison_values():
    # Gosper's error at N = 8 is 8.97e-8, just below the recursion's 1.82e-7 at n = 2
    report = gosper.compare_with_recursion(8, 2)
    assert report.gosper_digits["zeta5"] == 7
    assert report.recursion_digits["zeta5"] == 6
    assert report.leader == "gosper"
