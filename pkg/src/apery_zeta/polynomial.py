"""Integer polynomials and real-root isolation by Sturm counting plus bisection."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

from .interval import RationalInterval

Number = Union[int, Fraction]


class NotSquarefreeError(ValueError):
    """Raised when root isolation is asked for a polynomial with repeated roots."""


class IntPolynomial:
    """Univariate polynomial with integer coefficients, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def x(cls) -> IntPolynomial:
        return cls([0, 1])

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls([c])

    @classmethod
    def from_descending(cls, coeffs: Sequence[int]) -> IntPolynomial:
        """Build from coefficients written highest power first, as printed."""
        return cls(reversed(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, x: Number):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        return self + (-_lift(other))

    def __rsub__(self, other: int) -> IntPolynomial:
        return _lift(other) - self

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _lift(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = IntPolynomial([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, h: int) -> IntPolynomial:
        """Return the polynomial n -> self(n + h)."""
        out = [0] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            if c:
                for k in range(i + 1):
                    out[k] += c * comb(i, k) * h ** (i - k)
        return IntPolynomial(out)

    def reflect(self) -> IntPolynomial:
        """Return the polynomial n -> self(-n)."""
        return IntPolynomial(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def taylor(self, x0: Number, count: int) -> list:
        """First ``count`` Taylor coefficients of self around x0 (repeated synthetic division)."""
        cs = list(self.coeffs)
        out = []
        for _ in range(count):
            if not cs:
                out.append(0)
                continue
            acc = 0
            quotient = [0] * (len(cs) - 1)
            for i in range(len(cs) - 1, -1, -1):
                acc = acc * x0 + cs[i]
                if i:
                    quotient[i - 1] = acc
            out.append(acc)
            cs = quotient
        return out


def _lift(p: IntPolynomial | int) -> IntPolynomial:
    return p if isinstance(p, IntPolynomial) else IntPolynomial([p])


# ---------------------------------------------------------------------------
# dense rational polynomial helpers (Sturm sequences need field division)

def _strip(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b):
        factor = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= factor * c
        a.pop()
        _strip(a)
    return a


def _gcd_degree(a: list[Fraction], b: list[Fraction]) -> int:
    while b:
        a, b = b, _rem(a, b)
    return len(a) - 1


def sturm_sequence(p: IntPolynomial) -> list[list[Fraction]]:
    seq = [[Fraction(c) for c in p.coeffs], [Fraction(c) for c in p.derivative().coeffs]]
    while seq[-1]:
        r = _rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])
    return seq


def _eval(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _variations(seq: list[list[Fraction]], x: Fraction) -> int:
    signs = [v for v in (_eval(p, x) for p in seq) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def cauchy_bound(p: IntPolynomial) -> Fraction:
    """All complex roots lie strictly inside |z| < 1 + max|c_i| / |lead|."""
    return 1 + Fraction(max(abs(c) for c in p.coeffs[:-1]), abs(p.leading))


def isolate_real_roots(p: IntPolynomial, digits: int) -> list[RationalInterval]:
    """Enclose every real root of a squarefree polynomial.

    Returns pairwise disjoint intervals in ascending order, each of width at
    most ``10**-digits``. Isolation is fixed by the Sturm sequence and the
    Cauchy bound alone, and refinement is plain bisection, so the result for
    ``digits + 1`` always nests inside the result for ``digits``.
    """
    if p.degree < 1:
        raise ValueError("need a nonconstant polynomial")
    fp = [Fraction(c) for c in p.coeffs]
    if _gcd_degree(fp, [Fraction(c) for c in p.derivative().coeffs]) > 0:
        raise NotSquarefreeError(f"{p!r} has a repeated factor")
    seq = sturm_sequence(p)
    bound = cauchy_bound(p)

    isolated: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        count = _variations(seq, a) - _variations(seq, b)
        if count == 0:
            continue
        if count == 1:
            isolated.append((a, b))
            continue
        m = (a + b) / 2
        if _eval(fp, m) == 0:
            isolated.append((m, m))
            # the root at m is counted in (a, m], exclude it from both halves
            eps = (b - a) / 4
            while _variations(seq, m - eps) - _variations(seq, m + eps) != 1:
                eps /= 2
            stack.append((m + eps, b))
            stack.append((a, m - eps))
            continue
        stack.append((m, b))
        stack.append((a, m))

    tol = Fraction(1, 10**digits)
    out = []
    for a, b in sorted(isolated):
        out.append(_refine(fp, a, b, tol))
    return out


def _refine(fp: list[Fraction], a: Fraction, b: Fraction, tol: Fraction) -> RationalInterval:
    fa, fb = _eval(fp, a), _eval(fp, b)
    if fb == 0:
        return RationalInterval(b, b)
    while b - a > tol:
        m = (a + b) / 2
        fm = _eval(fp, m)
        if fm == 0:
            return RationalInterval(m, m)
        if (fm > 0) == (fa > 0):
            a, fa = m, fm
        else:
            b = m
    return RationalInterval(a, b)


def roots_by_modulus(p: IntPolynomial, digits: int) -> tuple[RationalInterval, ...]:
    """Real root enclosures ordered by increasing modulus."""
    return tuple(sorted(isolate_real_roots(p, digits), key=lambda r: abs(r.midpoint)))
