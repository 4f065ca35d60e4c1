"""Auxiliary recursions satisfied by the R5 and R5~ linear-form coefficients.

The b-polynomials are not transcribed separately: they come from the
a-polynomials of the main recursion through n -> -n reflections, so the
reflection identities carry weight in every check below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Mapping, Sequence

from .approx import RateReport, required_digits
from .arith import log_abs
from .interval import RationalInterval
from .polynomial import IntPolynomial, roots_by_modulus
from .recurrence import RecurrenceSystem, solve
from .report import Status, VerificationReport, stopwatch
from .series import Family, linear_form_coeffs, series_enclosure
from .zeta import zeta_enclosure
from .zeta5 import PRINTED, CharacteristicRoots, Zeta5Coefficients, char_roots_mu

X = IntPolynomial.x()

BT0_PRINTED = (41218, 35648, -932, -13190, -5128, 811, 957, 174)
BT1_PRINTED = (
    3874492, -14084302, 12425954, 8641603, -15230839, -1369195, 8618417,
    -623249, -2785973, 308165, 495325, -40670, -37632,
)
BT2_FACTOR = 2
BT2_PRINTED = (
    48802112, -201803328, 267014032, -69927236, -95912858, 37524471, 30257812,
    -9523224, -8524312, 2138687, 1507490, -398634, -111012, 33408,
)

LAMBDA_POLY = IntPolynomial.from_descending([1, -188, -2368, 4])
# roughly log(lambda_1); only steers how many zeta digits a form needs
_LOG_LAMBDA1 = -6.4


@dataclass(frozen=True)
class AuxCoefficients:
    main: Zeta5Coefficients = field(default=PRINTED)
    bt0: tuple[int, ...] = BT0_PRINTED
    bt1: tuple[int, ...] = BT1_PRINTED
    bt2: tuple[int, ...] = BT2_PRINTED

    # b0(n) = -a0(-n), b1(n) = a2(-n), b2(n) = -a1(-n)
    @property
    def b0(self) -> IntPolynomial:
        return -self.main.poly_a0.reflect()

    @property
    def b1(self) -> IntPolynomial:
        return self.main.poly_a2.reflect()

    @property
    def b2(self) -> IntPolynomial:
        return -self.main.poly_a1.reflect()

    @property
    def btilde0(self) -> IntPolynomial:
        return IntPolynomial.from_descending(self.bt0)

    @property
    def btilde1(self) -> IntPolynomial:
        return IntPolynomial.from_descending(self.bt1)

    @property
    def btilde2(self) -> IntPolynomial:
        return BT2_FACTOR * IntPolynomial.from_descending(self.bt2)

    def perturbed(self, name: str, power: int, delta: int = 1) -> AuxCoefficients:
        printed = list(getattr(self, name))
        printed[len(printed) - 1 - power] += delta
        return replace(self, **{name: tuple(printed)})

    def system8(self) -> RecurrenceSystem:
        b0, b1, b2 = self.b0, self.b1, self.b2
        return RecurrenceSystem(
            lead=X * (X + 1) ** 5 * b0.shift(-1),
            c0=-2 * X * b1,
            c1=-b2,
            c2=2 * (X - 1) ** 5 * (2 * X - 1) * b0,
            name="aux8",
        )

    def system9(self) -> RecurrenceSystem:
        # the last term is read as acting on the same sequence as the others
        b0, b1, b2 = self.btilde0, self.btilde1, self.btilde2
        return RecurrenceSystem(
            lead=X**3 * (X + 1) ** 3 * b0.shift(-1),
            c0=-2 * X * b1,
            c1=-b2,
            c2=2 * X * (X - 1) ** 4 * (2 * X - 3) * b0,
            name="aux9",
        )


AUX_PRINTED = AuxCoefficients()


def coeff_b(i: int, n: int) -> int:
    return (AUX_PRINTED.b0, AUX_PRINTED.b1, AUX_PRINTED.b2)[i](n)


def coeff_btilde(i: int, n: int) -> int:
    return (AUX_PRINTED.btilde0, AUX_PRINTED.btilde1, AUX_PRINTED.btilde2)[i](n)


def oracle_coefficients(family: Family, n_max: int) -> dict[str, list[Fraction]]:
    forms = [linear_form_coeffs(family, n) for n in range(n_max + 1)]
    return {
        "u": [f.u for f in forms],
        "w": [f.w for f in forms],
        "v": [f.v for f in forms],
    }


def _interval_residual_ok(system: RecurrenceSystem, family: Family, n: int):
    """Series-route enclosures of r_{n-2..n+1} plugged into the recurrence.

    Returns (contains_zero, digits used). Each r_m gets just enough digits
    for its term to be resolved to 1e-10 of the largest term; magnitudes for
    that budget come from the exact linear forms.
    """
    coeffs = system.coefficients(n)
    indices = (n + 1, n, n - 1, n - 2)
    sizes = []
    for c, m in zip(coeffs, indices):
        f = linear_form_coeffs(family, m)
        sizes.append(abs(c) * form_value(family, f.u, f.w, f.v, m).magnitude())
    largest_guess = max(sizes)
    digits_used = 0
    for extra in (12, 18, 30, 60):
        terms = []
        for c, m in zip(coeffs, indices):
            ratio = Fraction(abs(c)) / largest_guess if c else Fraction(0)
            d = max(5, math.ceil(log_abs(ratio) / math.log(10)) + extra) if ratio else 5
            digits_used = max(digits_used, d)
            terms.append(c * series_enclosure(family, m, d))
        residual = sum(terms[1:], terms[0])
        largest = max(t.magnitude() for t in terms)
        if residual.width * 10**10 <= largest:
            return residual.contains(0), digits_used
    return None, digits_used


def _verify(
    check: str,
    system: RecurrenceSystem,
    family: Family,
    N: int,
    seqs: Mapping[str, Sequence[Fraction]] | None,
    interval_max: int,
) -> VerificationReport:
    with stopwatch() as sw:
        if seqs is None:
            seqs = oracle_coefficients(family, N + 1)
        failure = None
        for n in range(2, N + 1):
            for name, seq in seqs.items():
                res = system.residual(seq, n)
                if res != 0:
                    failure = {"sequence": name, "n": n, "residual": res}
                    break
            if failure:
                break
        indeterminate = None
        if failure is None:
            for n in range(2, min(N, interval_max) + 1):
                ok, digits = _interval_residual_ok(system, family, n)
                if ok is None:
                    indeterminate = {"sequence": "r", "n": n, "digits": digits}
                    break
                if not ok:
                    failure = {"sequence": "r", "n": n, "residual": "interval excludes 0"}
                    break
    if failure:
        return VerificationReport(check, (2, N), Status.FAIL, failure, sw.seconds)
    if indeterminate:
        return VerificationReport(check, (2, N), Status.INDETERMINATE, indeterminate, sw.seconds)
    return VerificationReport(check, (2, N), Status.PASS, None, sw.seconds)


def verify_recursion_8(
    N: int,
    sequences: Mapping[str, Sequence[Fraction]] | None = None,
    coeffs: AuxCoefficients = AUX_PRINTED,
    interval_max: int = 10,
) -> VerificationReport:
    """u_n, w_n, v_n annihilated exactly by the R5 recursion, 2 <= n <= N; r_n numerically."""
    return _verify("aux.recursion8", coeffs.system8(), Family.R5, N, sequences, interval_max)


def verify_recursion_9(
    N: int,
    sequences: Mapping[str, Sequence[Fraction]] | None = None,
    coeffs: AuxCoefficients = AUX_PRINTED,
    interval_max: int = 10,
) -> VerificationReport:
    return _verify("aux.recursion9", coeffs.system9(), Family.R5_TILDE, N, sequences, interval_max)


def reflection_check(points: int = 20) -> VerificationReport:
    """b0(n) = -a0(-n), b1(n) = a2(-n), b2(n) = -a1(-n) evaluated pointwise."""
    a = AUX_PRINTED.main
    pairs = (
        ("b0", AUX_PRINTED.b0, lambda n: -a.poly_a0(-n)),
        ("b1", AUX_PRINTED.b1, lambda n: a.poly_a2(-n)),
        ("b2", AUX_PRINTED.b2, lambda n: -a.poly_a1(-n)),
    )
    with stopwatch() as sw:
        for name, poly, ref in pairs:
            for n in range(-points // 2, points - points // 2):
                if poly(n) != ref(n):
                    return VerificationReport(
                        "aux.reflection", (-points // 2, points - points // 2 - 1), Status.FAIL,
                        {"polynomial": name, "n": n}, sw.seconds,
                    )
    return VerificationReport(
        "aux.reflection", (-points // 2, points - points // 2 - 1), Status.PASS, None, sw.seconds
    )


def char_roots_lambda(digits: int) -> CharacteristicRoots:
    """Enclosures of the roots of lambda^3 - 188 lambda^2 - 2368 lambda + 4."""
    return CharacteristicRoots(roots_by_modulus(LAMBDA_POLY, digits))


def root_relations(digits: int = 16) -> dict[str, dict]:
    """mu_1 = l1 l2, mu_2 = l1 l3, mu_3 = l2 l3 as interval products."""
    lam = char_roots_lambda(digits)
    mu = char_roots_mu(digits)
    out = {}
    for i, (j, k) in enumerate(((0, 1), (0, 2), (1, 2))):
        product = lam[j] * lam[k]
        out[f"mu{i + 1}"] = {
            "mu": mu[i],
            "product": product,
            "overlap": mu[i].overlaps(product),
            "width": max(product.width, mu[i].width),
        }
    return out


def roots_check(digits: int = 16, max_width: Fraction = Fraction(1, 10**12)) -> VerificationReport:
    with stopwatch() as sw:
        rel = root_relations(digits)
    for name, r in rel.items():
        if not r["overlap"] or r["width"] > max_width:
            return VerificationReport(
                "aux.root_products", None, Status.FAIL,
                {"relation": name, "overlap": r["overlap"], "width": r["width"]}, sw.seconds,
            )
    return VerificationReport("aux.root_products", None, Status.PASS, None, sw.seconds)


def _forward(family: Family, n: int) -> dict[str, list[Fraction]]:
    """Coefficient sequences up to n, seeded by the oracle and run through its auxiliary recursion."""
    seeds = oracle_coefficients(family, 2)
    system = AUX_PRINTED.system8() if family is Family.R5 else AUX_PRINTED.system9()
    names = ("u", "w", "v")
    runs = solve(system, [seeds[k] for k in names], max(n, 2))
    return dict(zip(names, runs))


def form_value(family: Family, u: Fraction, w: Fraction, v: Fraction, n: int) -> RationalInterval:
    """u zeta(5) + w zeta(3) - v with enough digits to resolve a form of size lambda_1^n."""
    digits = required_digits(max(abs(u), abs(w), 1), n, _LOG_LAMBDA1)
    for _ in range(4):
        value = u * zeta_enclosure(5, digits) + w * zeta_enclosure(3, digits) - v
        if value.sign():
            break
        digits *= 2
    return value


def rates_aux(n: int, family: Family = Family.R5) -> RateReport:
    if n < 1:
        raise ValueError("rates need n >= 1")
    family = Family(family)
    seqs = _forward(family, n)
    u, w, v = seqs["u"][n], seqs["w"][n], seqs["v"][n]
    r = form_value(family, u, w, v, n)
    lam = char_roots_lambda(12)
    log_l1, log_l3 = log_abs(lam[0].midpoint), log_abs(lam[2].midpoint)
    rates = {
        "r": log_abs(r.midpoint) / n,
        "u": log_abs(u) / n,
        "w": log_abs(w) / n,
        "v": log_abs(v) / n,
    }
    targets = {"r": log_l1, "u": log_l3, "w": log_l3, "v": log_l3}
    return RateReport(n, rates, targets)


def sign_check_aux(n_max: int) -> VerificationReport:
    """r_n > 0, rt_n < 0 and all six coefficient sequences positive for 1 <= n <= n_max."""
    with stopwatch() as sw:
        for n in range(1, n_max + 1):
            for family, want in ((Family.R5, 1), (Family.R5_TILDE, -1)):
                f = linear_form_coeffs(family, n)
                for name in ("u", "w", "v"):
                    if getattr(f, name) <= 0:
                        return VerificationReport(
                            "aux.signs", (1, n_max), Status.FAIL,
                            {"n": n, "family": family.value, "coefficient": name}, sw.seconds,
                        )
                if form_value(family, f.u, f.w, f.v, n).sign() != want:
                    return VerificationReport(
                        "aux.signs", (1, n_max), Status.FAIL,
                        {"n": n, "family": family.value, "coefficient": "r"}, sw.seconds,
                    )
    return VerificationReport("aux.signs", (1, n_max), Status.PASS, None, sw.seconds)


def lead_nonvanishing(n_max: int) -> bool:
    s8, s9 = AUX_PRINTED.system8(), AUX_PRINTED.system9()
    return all(s8.lead(n) != 0 and s9.lead(n) != 0 for n in range(2, n_max + 1))
