"""Simultaneous approximations to zeta(5) and zeta(3) from a third-order recursion.

The recursion

    (n+1)^6 a0(n) x[n+1] + a1(n) x[n] - 4(2n-1) a2(n) x[n-1]
        - 4 (n-1)^4 (2n-1)(2n-3) a0(n+1) x[n-2] = 0

has three solutions q, p, pt fixed by the data at n = 0, 1, 2. The forms
q_n zeta(5) - p_n and q_n zeta(3) - pt_n shrink geometrically, so p_n/q_n
and pt_n/q_n converge to zeta(5) and zeta(3).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache

from .approx import LinearFormValue, RateReport, linear_form_values, required_digits
from .arith import lcm_sequence, log_abs, to_decimal
from .interval import RationalInterval
from .polynomial import IntPolynomial, roots_by_modulus
from .recurrence import RecurrenceSystem, solve
from .report import Status, VerificationReport, first_failure, stopwatch
from .zeta import zeta_enclosure

X = IntPolynomial.x()

# Coefficients as printed, highest power first. a1 carries an outer factor 2.
A0_PRINTED = (41218, -48459, 20010, -2871)
A1_PRINTED = (
    48802112, 89030880, 36002654, -24317344, -19538418,
    1311365, 3790503, 460056, -271701, -60291,
)
A1_FACTOR = 2
A2_PRINTED = (
    3874492, -2617900, -3144314, 2947148, 647130,
    -1182926, 115771, 170716, -44541,
)

INITIAL_Q = (Fraction(-1), Fraction(42), Fraction(-17934))
INITIAL_P = (Fraction(0), Fraction(87, 2), Fraction(-1190161, 64))
INITIAL_PT = (Fraction(0), Fraction(101, 2), Fraction(-344923, 16))

MU_POLY = IntPolynomial.from_descending([1, 2368, -752, -16])
LOG_MU2 = -1.08607936  # published limit of log|l_n|/n

# Published approximation table: n -> (p_n/q_n or None, kind, value).
# kind "trunc" means |zeta(5) - p_n/q_n| truncates to value; "below" is an upper bound.
PUBLISHED_TABLE: dict[int, tuple[str | None, str, str]] = {
    0: ("0", "trunc", "1.036927755"),
    1: ("29/28", "trunc", "0.001213469"),
    2: ("24289/23424", "trunc", "0.000000182"),
    3: ("7682021239/7408444032", "below", "2.80e-11"),
    4: ("24943788950905/24055474286592", "below", "4.13e-15"),
    5: ("81875586674776013003/78959779279372800000", "below", "6.02e-19"),
    6: ("282653756112686336975107/272587704119854963200000", "below", "8.71e-23"),
    7: ("215903781003833520407770175189/208214873150908926517286400000", "below", "1.26e-26"),
    10: (None, "below", "3.71e-38"),
    20: (None, "below", "1.32e-76"),
    50: (None, "below", "5.52e-192"),
}


@dataclass(frozen=True)
class Zeta5Coefficients:
    a0: tuple[int, ...] = A0_PRINTED
    a1: tuple[int, ...] = A1_PRINTED
    a2: tuple[int, ...] = A2_PRINTED

    @property
    def poly_a0(self) -> IntPolynomial:
        return IntPolynomial.from_descending(self.a0)

    @property
    def poly_a1(self) -> IntPolynomial:
        return A1_FACTOR * IntPolynomial.from_descending(self.a1)

    @property
    def poly_a2(self) -> IntPolynomial:
        return IntPolynomial.from_descending(self.a2)

    def perturbed(self, name: str, power: int, delta: int = 1) -> Zeta5Coefficients:
        """Copy with the printed coefficient of n**power in ``name`` changed by delta."""
        printed = list(getattr(self, name))
        printed[len(printed) - 1 - power] += delta
        return replace(self, **{name: tuple(printed)})

    def system(self) -> RecurrenceSystem:
        a0, a1, a2 = self.poly_a0, self.poly_a1, self.poly_a2
        return RecurrenceSystem(
            lead=(X + 1) ** 6 * a0,
            c0=a1,
            c1=-4 * (2 * X - 1) * a2,
            c2=-4 * (X - 1) ** 4 * (2 * X - 1) * (2 * X - 3) * a0.shift(1),
            name="zeta5",
        )


PRINTED = Zeta5Coefficients()


def coeff_a(i: int, n: int) -> int:
    poly = (PRINTED.poly_a0, PRINTED.poly_a1, PRINTED.poly_a2)[i]
    return poly(n)


@dataclass(frozen=True)
class Sequences:
    q: tuple[Fraction, ...]
    p: tuple[Fraction, ...]
    pt: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.q)


@lru_cache(maxsize=8)
def _solve(coeffs: Zeta5Coefficients, n_max: int) -> Sequences:
    q, p, pt = solve(coeffs.system(), (INITIAL_Q, INITIAL_P, INITIAL_PT), n_max)
    return Sequences(tuple(q), tuple(p), tuple(pt))


def sequences(
    n_max: int, coeffs: Zeta5Coefficients = PRINTED, max_bits: int | None = None
) -> Sequences:
    """Exact q_n, p_n, pt_n for 0 <= n <= n_max."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if max_bits is not None:
        q, p, pt = solve(coeffs.system(), (INITIAL_Q, INITIAL_P, INITIAL_PT), n_max, max_bits)
        return Sequences(tuple(q), tuple(p), tuple(pt))
    return _solve(coeffs, n_max)


@dataclass(frozen=True)
class Approximation:
    n: int
    value: Fraction
    error: RationalInterval  # encloses |zeta(5) - value|


def approximation(n: int) -> Approximation:
    """p_n/q_n in lowest terms with a certified enclosure of its distance to zeta(5)."""
    seq = sequences(max(n, 2))
    q, p = seq.q[n], seq.p[n]
    if q == 0:
        raise ZeroDivisionError(f"q_{n} vanishes")
    value = p / q
    # the error is |l_n|/|q_n|, so the same digits that fix the sign of l_n suffice
    digits = required_digits(q, n, LOG_MU2)
    while True:
        err = abs(zeta_enclosure(5, digits) - value)
        if err.lo > 0 and err.width * 10**10 <= err.lo:
            return Approximation(n, value, err)
        digits *= 2


def linear_forms(n_max: int, max_doublings: int = 3) -> list[LinearFormValue]:
    """l_n = q_n zeta(5) - p_n and lt_n = q_n zeta(3) - pt_n for 0 <= n <= n_max."""
    seq = sequences(max(n_max, 2))
    return linear_form_values(
        seq.q[: n_max + 1], seq.p[: n_max + 1], seq.pt[: n_max + 1], (5, 3), LOG_MU2, max_doublings
    )


@dataclass(frozen=True)
class CharacteristicRoots:
    roots: tuple[RationalInterval, ...]  # increasing modulus

    def __getitem__(self, i: int) -> RationalInterval:
        return self.roots[i]


def char_roots_mu(digits: int) -> CharacteristicRoots:
    """Enclosures of the roots of mu^3 + 2368 mu^2 - 752 mu - 16."""
    return CharacteristicRoots(roots_by_modulus(MU_POLY, digits))


def rate_report(n: int) -> RateReport:
    """Finite-n growth rates log|x_n|/n next to their limits."""
    if n < 1:
        raise ValueError("rates need n >= 1")
    seq = sequences(max(n, 2))
    form = linear_form_values(
        (seq.q[n],), (seq.p[n],), (seq.pt[n],), (5, 3), LOG_MU2, 3, index_offset=n
    )[0]
    mu = char_roots_mu(12)
    log_mu2 = log_abs(mu[1].midpoint)
    log_mu3 = log_abs(mu[2].midpoint)
    rates: dict[str, float | None] = {
        "l": form.log_abs_l() / n if form.resolved else None,
        "lt": form.log_abs_lt() / n if form.resolved else None,
        "q": log_abs(seq.q[n]) / n,
        "p": log_abs(seq.p[n]) / n,
        "pt": log_abs(seq.pt[n]) / n,
    }
    targets = {"l": log_mu2, "lt": log_mu2, "q": log_mu3, "p": log_mu3, "pt": log_mu3}
    return RateReport(n, rates, targets)


def integrality_check(n_max: int, coeffs: Zeta5Coefficients = PRINTED) -> VerificationReport:
    """q_n, 2 D_n^5 p_n and 2 D_n^3 pt_n are integers for 1 <= n <= n_max."""
    seq = sequences(max(n_max, 2), coeffs)

    def bad(item):
        n, d = item
        for name, value in (
            ("q", seq.q[n]),
            ("2*D^5*p", 2 * d**5 * seq.p[n]),
            ("2*D^3*pt", 2 * d**3 * seq.pt[n]),
        ):
            if value.denominator != 1:
                return {"n": n, "quantity": name, "denominator": value.denominator}
        return None

    return first_failure(
        "zeta5.integrality", (1, n_max), zip(range(1, n_max + 1), lcm_sequence(n_max)), bad
    )


def alternation_check(n_max: int) -> VerificationReport:
    """(-1)^(n-1) q_n, p_n, pt_n > 0 for 1 <= n <= n_max."""
    seq = sequences(max(n_max, 2))

    def bad(n):
        sgn = 1 if n % 2 else -1
        for name, s in (("q", seq.q), ("p", seq.p), ("pt", seq.pt)):
            if sgn * s[n] <= 0:
                return {"n": n, "sequence": name, "value": s[n]}
        return None

    return first_failure("zeta5.alternation", (1, n_max), range(1, n_max + 1), bad)


def sign_check(n_max: int) -> VerificationReport:
    """l_n > 0 and lt_n < 0 for 1 <= n <= n_max, certified by intervals."""
    with stopwatch() as sw:
        forms = linear_forms(n_max)[1:]
    for f in forms:
        if not f.resolved:
            return VerificationReport(
                "zeta5.signs", (1, n_max), Status.INDETERMINATE,
                {"n": f.n, "reason": "sign not resolved"}, sw.seconds,
            )
        if f.l.sign() != 1 or f.lt.sign() != -1:
            return VerificationReport(
                "zeta5.signs", (1, n_max), Status.FAIL,
                {"n": f.n, "l": to_decimal(f.l, 5), "lt": to_decimal(f.lt, 5)}, sw.seconds,
            )
    return VerificationReport("zeta5.signs", (1, n_max), Status.PASS, None, sw.seconds)


def _published_bound(text: str) -> Fraction:
    mantissa, exponent = text.split("e")
    return Fraction(mantissa) * Fraction(10) ** int(exponent)


def table_row(n: int) -> dict:
    """One row of the approximation table, compared with the published entry if any."""
    approx = approximation(n)
    row = {
        "n": n,
        "fraction": str(approx.value),
        "error": approx.error,
        "error_decimal": _sci(approx.error.hi),
    }
    published = PUBLISHED_TABLE.get(n)
    if published is None:
        return row
    fraction, kind, value = published
    fraction_ok = fraction is None or fraction == str(approx.value)
    if kind == "trunc":
        places = len(value.split(".")[1])
        error_ok = to_decimal(approx.error.lo, places) == value == to_decimal(approx.error.hi, places)
    else:
        error_ok = approx.error.hi < _published_bound(value)
    row["published"] = {"fraction": fraction, "kind": kind, "value": value}
    row["status"] = Status.PASS.value if fraction_ok and error_ok else Status.FAIL.value
    return row


def table_check(rows=tuple(PUBLISHED_TABLE)) -> VerificationReport:
    with stopwatch() as sw:
        results = [table_row(n) for n in rows]
    for row in results:
        if row["status"] != Status.PASS.value:
            return VerificationReport(
                "zeta5.table", (min(rows), max(rows)), Status.FAIL,
                {"n": row["n"], "fraction": row["fraction"], "error": row["error_decimal"]},
                sw.seconds,
            )
    return VerificationReport("zeta5.table", (min(rows), max(rows)), Status.PASS, None, sw.seconds)


def _sci(x: Fraction, places: int = 3) -> str:
    """Scientific notation of a positive rational, rounded up in the last place."""
    if x <= 0:
        return to_decimal(x, places)
    exponent = math.floor(log_abs(x) / math.log(10))
    # log may be off by one near powers of ten; fix exactly
    while x >= Fraction(10) ** (exponent + 1):
        exponent += 1
    while x < Fraction(10) ** exponent:
        exponent -= 1
    mantissa = x / Fraction(10) ** exponent
    scaled = -((-mantissa.numerator * 10**places) // mantissa.denominator)
    if scaled >= 10 ** (places + 1):
        scaled //= 10
        exponent += 1
    digits = str(scaled)
    return f"{digits[0]}.{digits[1:]}e{exponent}"
