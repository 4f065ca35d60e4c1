"""Simultaneous approximations to zeta(3) and zeta(2) from a second third-order recursion.

    (n+1)^4 a0(n) x[n+1] - a1(n) x[n] + 4(2n-1) a2(n) x[n-1]
        - 4 (n-1)^2 (2n-1)(2n-3) a0(n+1) x[n-2] = 0

with solutions q', p', pt'. The characteristic polynomial has one real root
and a complex pair; only the pair's modulus matters for the growth rates.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache

from .approx import LinearFormValue, RateReport, linear_form_values, required_digits
from .arith import lcm_sequence, log_abs
from .interval import RationalInterval
from .polynomial import IntPolynomial, isolate_real_roots
from .recurrence import RecurrenceSystem, solve
from .report import Status, VerificationReport, first_failure, stopwatch
from .series import Family, LinearFormCoeffs, determinants, linear_form_coeffs
from .zeta import zeta_enclosure
from .zeta5 import Sequences

X = IntPolynomial.x()

A0_PRINTED = (946, -731, 153)
A1_PRINTED = (104060, 127710, 12788, -34525, -8482, 3298, 1071)
A1_FACTOR = 2
A2_PRINTED = (3784, -1032, -1925, 853, 328, -184)

INITIAL_Q = (Fraction(1), Fraction(14), Fraction(978))
INITIAL_P = (Fraction(0), Fraction(17), Fraction(9405, 8))
INITIAL_PT = (Fraction(0), Fraction(23), Fraction(6435, 4))

MU_POLY = IntPolynomial.from_descending([1, -220, 32, -16])
LOG_MU2 = -1.31018925


@dataclass(frozen=True)
class Zeta23Coefficients:
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

    def perturbed(self, name: str, power: int, delta: int = 1) -> Zeta23Coefficients:
        printed = list(getattr(self, name))
        printed[len(printed) - 1 - power] += delta
        return replace(self, **{name: tuple(printed)})

    def system(self) -> RecurrenceSystem:
        a0, a1, a2 = self.poly_a0, self.poly_a1, self.poly_a2
        return RecurrenceSystem(
            lead=(X + 1) ** 4 * a0,
            c0=-a1,
            c1=4 * (2 * X - 1) * a2,
            c2=-4 * (X - 1) ** 2 * (2 * X - 1) * (2 * X - 3) * a0.shift(1),
            name="zeta23",
        )


PRINTED = Zeta23Coefficients()


@lru_cache(maxsize=8)
def _solve(coeffs: Zeta23Coefficients, n_max: int) -> Sequences:
    q, p, pt = solve(coeffs.system(), (INITIAL_Q, INITIAL_P, INITIAL_PT), n_max)
    return Sequences(tuple(q), tuple(p), tuple(pt))


def sequences23(
    n_max: int, coeffs: Zeta23Coefficients = PRINTED, max_bits: int | None = None
) -> Sequences:
    """Exact q'_n, p'_n, pt'_n for 0 <= n <= n_max."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if max_bits is not None:
        q, p, pt = solve(coeffs.system(), (INITIAL_Q, INITIAL_P, INITIAL_PT), n_max, max_bits)
        return Sequences(tuple(q), tuple(p), tuple(pt))
    return _solve(coeffs, n_max)


def linear_forms23(n_max: int, max_doublings: int = 3) -> list[LinearFormValue]:
    """q'_n zeta(3) - p'_n and q'_n zeta(2) - pt'_n."""
    seq = sequences23(max(n_max, 2))
    return linear_form_values(
        seq.q[: n_max + 1], seq.p[: n_max + 1], seq.pt[: n_max + 1], (3, 2), LOG_MU2, max_doublings
    )


@dataclass(frozen=True)
class Approximation23:
    n: int
    zeta3: Fraction
    zeta2: Fraction
    error3: RationalInterval
    error2: RationalInterval


def approximation23(n: int) -> Approximation23:
    seq = sequences23(max(n, 2))
    q = seq.q[n]
    v3, v2 = seq.p[n] / q, seq.pt[n] / q
    digits = required_digits(q, n, LOG_MU2)
    while True:
        e3 = abs(zeta_enclosure(3, digits) - v3)
        e2 = abs(zeta_enclosure(2, digits) - v2)
        if all(e.lo > 0 and e.width * 10**10 <= e.lo for e in (e3, e2)):
            return Approximation23(n, v3, v2, e3, e2)
        digits *= 2


@dataclass(frozen=True)
class CharacteristicRootsMuPrime:
    real: RationalInterval
    pair_modulus: RationalInterval


def char_roots_mu_prime(digits: int) -> CharacteristicRootsMuPrime:
    """Real root by bisection; the complex pair's modulus from |mu_1|^2 mu_3 = 16."""
    (real,) = isolate_real_roots(MU_POLY, digits + 2)
    bits = int((digits + 4) * 3.33) + 8
    modulus = (Fraction(16) / real).round_out(bits).sqrt(bits)
    return CharacteristicRootsMuPrime(real, modulus)


def rate_report23(n: int) -> RateReport:
    if n < 1:
        raise ValueError("rates need n >= 1")
    seq = sequences23(max(n, 2))
    form = linear_form_values(
        (seq.q[n],), (seq.p[n],), (seq.pt[n],), (3, 2), LOG_MU2, 3, index_offset=n
    )[0]
    roots = char_roots_mu_prime(12)
    log_mu2 = log_abs(roots.pair_modulus.midpoint)
    log_mu3 = log_abs(roots.real.midpoint)
    rates: dict[str, float | None] = {
        "l": form.log_abs_l() / n if form.resolved else None,
        "lt": form.log_abs_lt() / n if form.resolved else None,
        "q": log_abs(seq.q[n]) / n,
        "p": log_abs(seq.p[n]) / n,
        "pt": log_abs(seq.pt[n]) / n,
    }
    targets = {"l": log_mu2, "lt": log_mu2, "q": log_mu3, "p": log_mu3, "pt": log_mu3}
    return RateReport(n, rates, targets)


def integrality_check23(n_max: int) -> VerificationReport:
    """q'_n, D_n^3 p'_n and D_n^2 pt'_n are integers for 1 <= n <= n_max."""
    seq = sequences23(max(n_max, 2))

    def bad(item):
        n, d = item
        for name, value in (
            ("q'", seq.q[n]),
            ("D^3*p'", d**3 * seq.p[n]),
            ("D^2*pt'", d**2 * seq.pt[n]),
        ):
            if value.denominator != 1:
                return {"n": n, "quantity": name, "denominator": value.denominator}
        return None

    return first_failure(
        "zeta23.integrality", (1, n_max), zip(range(1, n_max + 1), lcm_sequence(n_max)), bad
    )


def positivity_check23(n_max: int) -> VerificationReport:
    seq = sequences23(max(n_max, 2))

    def bad(n):
        for name, s in (("q'", seq.q), ("p'", seq.p), ("pt'", seq.pt)):
            if s[n] <= 0:
                return {"n": n, "sequence": name, "value": s[n]}
        return None

    return first_failure("zeta23.positivity", (1, n_max), range(1, n_max + 1), bad)


@dataclass(frozen=True)
class Oracle23:
    n: int
    form: LinearFormCoeffs
    form_tilde: LinearFormCoeffs
    cross: tuple[Fraction, Fraction, Fraction]


def oracle23(n: int) -> Oracle23:
    """Linear-form coefficients of r'_n, rt'_n and the (q', p', pt') they determine.

    The same determinants as for the zeta(5) pair, with the opposite overall
    sign: that is what reproduces q'_0 = 1 from r'_0 = -zeta(3), rt'_0 = zeta(2).
    """
    f = linear_form_coeffs(Family.R23, n)
    g = linear_form_coeffs(Family.R23_TILDE, n)
    q, p, pt = determinants(f, g)
    return Oracle23(n, f, g, (-q, -p, -pt))


def oracle_check23(n_max: int, coeffs: Zeta23Coefficients = PRINTED) -> VerificationReport:
    seq = sequences23(max(n_max, 2), coeffs)

    def bad(n):
        got = oracle23(n).cross
        want = (seq.q[n], seq.p[n], seq.pt[n])
        if got != want:
            return {"n": n, "recursion": want, "oracle": got}
        return None

    return first_failure("zeta23.oracle", (0, n_max), range(n_max + 1), bad)


def convergence_ratio_check(
    n_lo: int = 50,
    n_hi: int = 200,
    band: tuple[Fraction, Fraction] = (Fraction(1, 10**4), Fraction(1, 100)),
    window: int = 5,
) -> VerificationReport:
    """The per-step error factor for zeta(3) and zeta(2), averaged over ``window``
    steps, stays inside ``band``: lo**w * e_n <= e_{n+w} <= hi**w * e_n.

    The dominant roots are a complex pair of argument about 1.30, so the errors
    carry a |cos(n*theta + phi)| factor and single-step ratios (window=1) swing
    by orders of magnitude. One period is about 4.8 steps, hence the default.
    """
    if window < 1 or n_hi - window < n_lo:
        raise ValueError("need window >= 1 and n_lo + window <= n_hi")
    lo_w, hi_w = band[0] ** window, band[1] ** window
    failure = None
    with stopwatch() as sw:
        seq = sequences23(n_hi)
        digits = required_digits(seq.q[n_hi], n_hi, LOG_MU2) + 20
        z3, z2 = zeta_enclosure(3, digits), zeta_enclosure(2, digits)
        errors = {
            "zeta3": [abs(z3 - seq.p[n] / seq.q[n]) for n in range(n_lo, n_hi + 1)],
            "zeta2": [abs(z2 - seq.pt[n] / seq.q[n]) for n in range(n_lo, n_hi + 1)],
        }
        for i in range(n_hi - n_lo - window + 1):
            for which, e in errors.items():
                a, b = e[i], e[i + window]
                if not (lo_w * a.hi <= b.lo and b.hi <= hi_w * a.lo):
                    failure = {
                        "n": n_lo + i,
                        "window": window,
                        "constant": which,
                        "log_factor": log_abs((b / a).midpoint) / window,
                    }
                    break
            if failure:
                break
    status = Status.FAIL if failure else Status.PASS
    return VerificationReport(
        "zeta23.convergence", (n_lo, n_hi), status, failure, sw.seconds, {"window": window}
    )
