from __future__ import annotations

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from apery_zeta.polynomial import (
    IntPolynomial,
    NotSquarefreeError,
    isolate_real_roots,
    roots_by_modulus,
)

X = IntPolynomial.x()
coeff_lists = st.lists(st.integers(min_value=-20, max_value=20), min_size=1, max_size=6)


@given(coeff_lists, coeff_lists, st.integers(min_value=-10, max_value=10))
def test_ring_operations_pointwise(a, b, x):
    p, q = IntPolynomial(a), IntPolynomial(b)
    assert (p + q)(x) == p(x) + q(x)
    assert (p - q)(x) == p(x) - q(x)
    assert (p * q)(x) == p(x) * q(x)
    assert (p**3)(x) == p(x) ** 3


@given(coeff_lists, st.integers(min_value=-5, max_value=5), st.integers(min_value=-10, max_value=10))
def test_shift_reflect(a, h, x):
    p = IntPolynomial(a)
    assert p.shift(h)(x) == p(x + h)
    assert p.reflect()(x) == p(-x)


def test_from_descending_and_degree():
    p = IntPolynomial.from_descending([1, 2368, -752, -16])
    assert p.degree == 3
    assert p.leading == 1
    assert p(0) == -16
    assert IntPolynomial([0, 0]).degree == -1
    assert IntPolynomial([0, 0]) == IntPolynomial([])


def test_taylor():
    p = (X + 2) ** 3
    assert p.taylor(-2, 4) == [0, 0, 0, 1]
    assert p.taylor(0, 2) == [8, 12]


def test_isolate_simple_roots():
    roots = isolate_real_roots(X**2 - 2, 10)
    assert len(roots) == 2
    assert all(r.width <= Fraction(1, 10**10) for r in roots)
    assert roots[0].hi < 0 < roots[1].lo
    assert roots[1].lo ** 2 <= 2 <= roots[1].hi ** 2


def test_rational_root_hit_exactly():
    roots = isolate_real_roots((X - 1) * (X + 3) * (2 * X - 1), 6)
    assert [r.contains(v) for r, v in zip(roots, (-3, Fraction(1, 2), 1))] == [True] * 3


def test_not_squarefree():
    with pytest.raises(NotSquarefreeError):
        isolate_real_roots((X - 1) ** 2 * (X + 1), 5)


def test_mu_roots_against_mpmath():
    p = IntPolynomial.from_descending([1, 2368, -752, -16])
    roots = roots_by_modulus(p, 20)
    mpmath.mp.dps = 40
    ref = sorted((r.real for r in mpmath.polyroots([1, 2368, -752, -16], maxsteps=200, extraprec=100)), key=abs)
    for enc, r in zip(roots, ref):
        assert enc.lo <= Fraction(mpmath.nstr(r, 35)) + Fraction(1, 10**30)
        assert Fraction(mpmath.nstr(r, 35)) - Fraction(1, 10**30) <= enc.hi


@given(st.integers(min_value=1, max_value=25))
def test_root_enclosures_nest(d):
    p = IntPolynomial.from_descending([1, -188, -2368, 4])
    coarse = isolate_real_roots(p, d)
    fine = isolate_real_roots(p, d + 3)
    for c, f in zip(coarse, fine):
        assert c.contains(f)
