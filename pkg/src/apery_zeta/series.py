"""Very-well-poised hypergeometric series as exact linear forms in zeta values.

Each series is sum_{k>=1} R(k) with a rational summand R whose poles sit at
k = 0, -1, ..., -n. Expanding

    R(k) = sum_{j,s} A[j][s] / (k + j)**s

and summing over k turns the s-layer into zeta(s) minus a harmonic
correction, so the whole series is an exact Q-linear combination of zeta
values and 1. That decomposition is the independent oracle the recursions
are checked against.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .interval import RationalInterval
from .polynomial import IntPolynomial
from .zeta import PrecisionError, zeta_enclosure


class Family(str, enum.Enum):
    R5 = "R5"
    R5_TILDE = "R5~"
    R23 = "R23"
    R23_TILDE = "R23~"

    @property
    def exponent(self) -> int:
        return 6 if self in (Family.R5, Family.R5_TILDE) else 3

    @property
    def zeta_arguments(self) -> tuple[int, int]:
        """zeta arguments carried by the coefficients (u, w)."""
        return (5, 3) if self.exponent == 6 else (3, 2)

    @property
    def vanishing_orders(self) -> tuple[int, ...]:
        # very-well-poised symmetry kills the even zeta values for the R5 pair
        return (1, 2, 4, 6) if self.exponent == 6 else (1,)


class LinearFormError(ArithmeticError):
    """A coefficient sum that must vanish did not."""


@dataclass(frozen=True)
class SummandSpec:
    """R(k) = prefactor * prod(a*k + c for a, c in factors) / prod_{j<=n} (k+j)**exponent."""

    family: Family
    n: int
    prefactor: Fraction
    factors: tuple[tuple[int, int], ...]
    exponent: int

    @property
    def numerator(self) -> IntPolynomial:
        p = IntPolynomial([1])
        for a, c in self.factors:
            p = p * IntPolynomial([c, a])
        return p

    @property
    def denominator_degree(self) -> int:
        return self.exponent * (self.n + 1)

    @property
    def decay(self) -> int:
        """Degree gap: R(k) = O(k**-decay)."""
        return self.denominator_degree - len(self.factors)


@lru_cache(maxsize=None)
def summand_spec(family: Family, n: int) -> SummandSpec:
    family = Family(family)
    if n < 0:
        raise ValueError("n must be >= 0")
    if family is Family.R5:
        pre = Fraction(math.factorial(n) ** 4, 2)
        factors = [(2, n)] + [(1, -j) for j in range(1, n + 1)] + [(1, n + j) for j in range(1, n + 1)]
    elif family is Family.R5_TILDE:
        pre = Fraction(-math.factorial(n) ** 4, 2)
        factors = [(2, n)] + [(1, -j) for j in range(n + 1)] + [(1, n + j) for j in range(n + 1)]
    elif family is Family.R23:
        pre = Fraction(-math.factorial(n) ** 2)
        factors = [(1, -j) for j in range(1, n + 1)]
    else:
        pre = Fraction(math.factorial(n) ** 2)
        factors = [(1, -j) for j in range(n + 1)]
    return SummandSpec(family, n, pre, tuple(factors), family.exponent)


def summand(family: Family, n: int, k: int) -> Fraction:
    """Exact k-th term of the series (k >= 1)."""
    if k < 1:
        raise ValueError("summation starts at k = 1")
    spec = summand_spec(family, n)
    num = 1
    for a, c in spec.factors:
        num *= a * k + c
    den = 1
    for j in range(n + 1):
        den *= (k + j) ** spec.exponent
    return spec.prefactor * Fraction(num, den)


# ---------------------------------------------------------------------------
# partial fractions


@dataclass(frozen=True)
class PFDecomposition:
    family: Family
    n: int
    A: tuple[tuple[Fraction, ...], ...]  # A[j][s-1], j = 0..n, s = 1..exponent

    @property
    def exponent(self) -> int:
        return len(self.A[0])

    def coeff(self, j: int, s: int) -> Fraction:
        return self.A[j][s - 1]

    def column_sum(self, s: int) -> Fraction:
        return sum((row[s - 1] for row in self.A), Fraction(0))

    def evaluate(self, k: Fraction) -> Fraction:
        """sum_{j,s} A[j][s] / (k+j)**s at a point k away from the poles."""
        total = Fraction(0)
        for j, row in enumerate(self.A):
            for s, a in enumerate(row, start=1):
                if a:
                    total += a / Fraction(k + j) ** s
        return total


def _series_mul(a: list[Fraction], b: list[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * order
    for i, x in enumerate(a[:order]):
        if x:
            for j in range(order - i):
                out[i + j] += x * b[j]
    return out


def _series_pow(a: list[Fraction], e: int, order: int) -> list[Fraction]:
    result = [Fraction(1)] + [Fraction(0)] * (order - 1)
    while e:
        if e & 1:
            result = _series_mul(result, a, order)
        a = _series_mul(a, a, order)
        e >>= 1
    return result


@lru_cache(maxsize=None)
def partial_fractions(family: Family, n: int) -> PFDecomposition:
    """Exact A[j][s] from Taylor expansion of (k+j)**e R(k) around k = -j."""
    spec = summand_spec(family, n)
    e = spec.exponent
    numerator = spec.numerator
    if numerator.degree >= spec.denominator_degree:
        raise ValueError(
            f"{spec.family.value} n={n}: numerator degree {numerator.degree} "
            f">= denominator degree {spec.denominator_degree}"
        )
    rows = []
    for j in range(n + 1):
        # with t = k + j: R = t**-e * N(t - j) * prod_{i != j} (t + i - j)**-e
        inverse = [Fraction(1)] + [Fraction(0)] * (e - 1)
        for i in range(n + 1):
            if i != j:
                d = i - j
                geometric = [Fraction((-1) ** m, d ** (m + 1)) for m in range(e)]
                inverse = _series_mul(inverse, geometric, e)
        local = _series_mul(
            [Fraction(c) for c in numerator.taylor(-j, e)],
            _series_pow(inverse, e, e),
            e,
        )
        rows.append(tuple(spec.prefactor * local[e - s] for s in range(1, e + 1)))
    return PFDecomposition(spec.family, n, tuple(rows))


# ---------------------------------------------------------------------------
# linear forms


@dataclass(frozen=True)
class LinearFormCoeffs:
    """series = u * zeta(a) + w * zeta(b) - v with (a, b) = family.zeta_arguments."""

    family: Family
    n: int
    u: Fraction
    w: Fraction
    v: Fraction

    def value(self, digits: int) -> RationalInterval:
        a, b = self.family.zeta_arguments
        return self.u * zeta_enclosure(a, digits) + self.w * zeta_enclosure(b, digits) - self.v


def harmonic(j: int, s: int) -> Fraction:
    """H_{j,s} = sum_{m=1}^{j} m**-s (zero for j = 0)."""
    return sum((Fraction(1, m**s) for m in range(1, j + 1)), Fraction(0))


@lru_cache(maxsize=None)
def linear_form_coeffs(family: Family, n: int) -> LinearFormCoeffs:
    pf = partial_fractions(family, n)
    fam = pf.family
    for s in fam.vanishing_orders:
        total = pf.column_sum(s)
        if total:
            raise LinearFormError(
                f"{fam.value} n={n}: sum_j A[j][{s}] = {total}, expected 0"
            )
    a, b = fam.zeta_arguments
    v = Fraction(0)
    for j in range(1, n + 1):
        for s in range(1, pf.exponent + 1):
            coeff = pf.coeff(j, s)
            if coeff:
                v += coeff * harmonic(j, s)
    return LinearFormCoeffs(fam, n, pf.column_sum(a), pf.column_sum(b), v)


def cross_products(n: int) -> tuple[Fraction, Fraction, Fraction]:
    """(q_n, p_n, pt_n) from the R5 pair: determinants eliminating zeta(3) or zeta(5)."""
    return determinants(linear_form_coeffs(Family.R5, n), linear_form_coeffs(Family.R5_TILDE, n))


def determinants(f: LinearFormCoeffs, g: LinearFormCoeffs) -> tuple[Fraction, Fraction, Fraction]:
    """g.w*f - f.w*g kills zeta(b); f.u*g - g.u*f kills zeta(a).

    Returns (f.u g.w - g.u f.w, g.w f.v - f.w g.v, f.u g.v - g.u f.v).
    """
    return (
        f.u * g.w - g.u * f.w,
        g.w * f.v - f.w * g.v,
        f.u * g.v - g.u * f.v,
    )


# ---------------------------------------------------------------------------
# numeric enclosure of the series itself

_MAX_TERMS = 1 << 22


def _tail_enclosure(spec: SummandSpec, K: int) -> RationalInterval:
    """Enclosure of sum_{k>K} R(k) for K > n.

    Write R(k) = C(k) k**-g. With t = 1/k in (0, 1/K], every numerator factor
    a + c t and every denominator factor (1 + j t)**-e is monotone in t, so
    C(k) stays inside an interval product of their ranges. The power sum
    sum_{k>K} k**-g lies between the integrals from K+1 and from K.
    """
    t = Fraction(1, K)
    c = RationalInterval.point(spec.prefactor)
    for a, off in spec.factors:
        ends = (Fraction(a), a + off * t)
        c = c * RationalInterval(min(ends), max(ends))
    for j in range(1, spec.n + 1):
        c = c * RationalInterval(1 / (1 + j * t) ** spec.exponent, Fraction(1))
    g = spec.decay
    powers = RationalInterval(
        Fraction(1, (g - 1) * (K + 1) ** (g - 1)), Fraction(1, (g - 1) * K ** (g - 1))
    )
    return c * powers


@lru_cache(maxsize=None)
def series_enclosure(family: Family, n: int, digits: int) -> RationalInterval:
    """Interval of width <= 10**-digits containing the full series."""
    spec = summand_spec(Family(family), n)
    if spec.decay < 2:
        raise ValueError("series does not converge absolutely")
    target = Fraction(1, 10**digits)
    bits = math.ceil((digits + 3) * math.log2(10)) + 48
    one = 1 << bits
    pre_num = spec.prefactor.numerator * one
    pre_den = spec.prefactor.denominator
    lo = hi = 0
    k = 0
    K = max(2 * n + 2, 32)
    while True:
        while k < K:
            k += 1
            num = 1
            for a, c in spec.factors:
                num *= a * k + c
            if num == 0:
                continue
            den = pre_den
            for j in range(n + 1):
                den *= (k + j) ** spec.exponent
            q, r = divmod(pre_num * num, den)
            lo += q
            hi += q + (1 if r else 0)
        tail = _tail_enclosure(spec, K)
        result = RationalInterval(Fraction(lo, one), Fraction(hi, one)) + tail
        if result.width <= target:
            return result
        if K >= _MAX_TERMS:
            raise PrecisionError(
                f"{spec.family.value} n={n}: {digits} digits not reached within {K} terms"
            )
        K *= 2
