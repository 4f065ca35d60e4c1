"""Verification suites grouped by selector, as run by ``apery-zeta verify``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from . import auxiliary, zeta5, zeta23
from .arith import lcm_sequence, log_abs
from .interval import RationalInterval
from .report import Status, VerificationReport, first_failure, stopwatch
from .series import Family, LinearFormError, linear_form_coeffs, partial_fractions, cross_products

SELECTORS = ("signs", "integrality", "oracle", "recursions", "roots", "rates")
SYSTEMS = ("zeta5", "zeta23")

# printed root values (truncated decimals)
MU_PRINTED = ("-0.02001512", "0.33753726", "-2368.31752213")
MU3_PRIME_PRINTED = "219.85478039"
LOG_MU2_PRIME_PRINTED = -1.31018925
RATE_TOLERANCE = 0.02

DEFAULT_RANGES = {
    "signs": 200,
    "alternation": 300,
    "aux_signs": 25,
    "integrality": 300,
    "inclusions": 25,
    "oracle5": 25,
    "oracle23": 15,
    "structure": 25,
    "recursions": 25,
    "rate_n": 400,
}


def truncation_cell(text: str) -> RationalInterval:
    """All reals whose decimal truncation toward zero prints as ``text``."""
    value = Fraction(text)
    ulp = Fraction(1, 10 ** len(text.split(".")[1]))
    return RationalInterval(value - ulp, value) if value < 0 else RationalInterval(value, value + ulp)


def inclusion_check(n_max: int) -> VerificationReport:
    """2u_n, 2D_n^2 w_n, 2D_n^5 v_n in Z for both zeta(5) families, 1 <= n <= n_max."""

    def bad(item):
        n, d = item
        for family in (Family.R5, Family.R5_TILDE):
            f = linear_form_coeffs(family, n)
            for name, value in (("2u", 2 * f.u), ("2D^2*w", 2 * d**2 * f.w), ("2D^5*v", 2 * d**5 * f.v)):
                if value.denominator != 1:
                    return {"n": n, "family": family.value, "quantity": name}
        return None

    return first_failure(
        "aux.inclusions", (1, n_max), zip(range(1, n_max + 1), lcm_sequence(n_max)), bad
    )


def structure_check(n_max: int, families: Iterable[Family] = tuple(Family)) -> VerificationReport:
    """sum_j A[j][s] = 0 for the orders that make each series a linear form in zeta values."""
    families = tuple(families)

    def bad(n):
        for family in families:
            pf = partial_fractions(family, n)
            for s in family.vanishing_orders:
                total = pf.column_sum(s)
                if total:
                    return {"n": n, "family": family.value, "order": s, "sum": total}
        return None

    return first_failure("series.structure", (0, n_max), range(n_max + 1), bad)


def oracle_check5(n_max: int, coeffs: zeta5.Zeta5Coefficients = zeta5.PRINTED) -> VerificationReport:
    """(q_n, p_n, pt_n) from the recursion equal the cross-products of the series coefficients."""
    seq = zeta5.sequences(max(n_max, 2), coeffs)

    def bad(n):
        try:
            got = cross_products(n)
        except LinearFormError as exc:
            return {"n": n, "error": str(exc)}
        want = (seq.q[n], seq.p[n], seq.pt[n])
        if got != want:
            return {"n": n, "recursion": want, "oracle": got}
        return None

    return first_failure("zeta5.oracle", (0, n_max), range(n_max + 1), bad)


def mu_printed_check(digits: int = 12) -> VerificationReport:
    """Enclosures of mu_1, mu_2, mu_3 sit inside the cells of their printed truncations."""
    with stopwatch() as sw:
        roots = zeta5.char_roots_mu(digits)
        failure = None
        for i, text in enumerate(MU_PRINTED):
            cell = truncation_cell(text)
            if not (cell.lo <= roots[i].lo and roots[i].hi <= cell.hi):
                failure = {"root": f"mu{i + 1}", "printed": text, "enclosure": roots[i]}
                break
    status = Status.FAIL if failure else Status.PASS
    return VerificationReport("zeta5.roots", None, status, failure, sw.seconds)


def mu_prime_check(digits: int = 12, tolerance: float = 1e-6) -> VerificationReport:
    """mu_3' inside its printed truncation cell; log|mu_2'| within ``tolerance`` of the printed value."""
    with stopwatch() as sw:
        roots = zeta23.char_roots_mu_prime(digits)
        cell = truncation_cell(MU3_PRIME_PRINTED)
        failure = None
        if not (cell.lo <= roots.real.lo and roots.real.hi <= cell.hi):
            failure = {"root": "mu3'", "printed": MU3_PRIME_PRINTED, "enclosure": roots.real}
        else:
            for end in (roots.pair_modulus.lo, roots.pair_modulus.hi):
                if abs(log_abs(end) - LOG_MU2_PRIME_PRINTED) > tolerance:
                    failure = {"root": "log|mu2'|", "printed": LOG_MU2_PRIME_PRINTED, "value": log_abs(end)}
                    break
    status = Status.FAIL if failure else Status.PASS
    return VerificationReport("zeta23.roots", None, status, failure, sw.seconds)


def rate_check(check: str, report, tolerance: float = RATE_TOLERANCE) -> VerificationReport:
    """Every finite-n rate within ``tolerance`` of its limit; INDETERMINATE if a form
    could not be resolved."""
    failure = None
    for key in sorted(report.rates):
        dev = report.deviation(key)
        if dev is None:
            return VerificationReport(
                check, (report.n, report.n), Status.INDETERMINATE,
                {"n": report.n, "quantity": key, "reason": "sign not resolved"},
            )
        if dev > tolerance and failure is None:
            failure = {
                "n": report.n,
                "quantity": key,
                "rate": report.rates[key],
                "target": report.targets[key],
                "deviation": dev,
            }
    status = Status.FAIL if failure else Status.PASS
    return VerificationReport(check, (report.n, report.n), status, failure, 0.0, {"tolerance": tolerance})


def _timed(check: str, fn: Callable[[], object]) -> VerificationReport:
    with stopwatch() as sw:
        out = fn()
    report = rate_check(check, out)
    report.seconds = sw.seconds
    return report


def recursion23_check(n_max: int) -> VerificationReport:
    """Oracle-built (q', p', pt') annihilated by the printed recursion, 2 <= n <= n_max - 1."""
    system = zeta23.PRINTED.system()
    with stopwatch() as sw:
        data = [zeta23.oracle23(n).cross for n in range(n_max + 1)]
    names = ("q'", "p'", "pt'")

    def bad(n):
        for i, name in enumerate(names):
            res = system.residual([row[i] for row in data], n)
            if res != 0:
                return {"n": n, "sequence": name, "residual": res}
        return None

    report = first_failure("zeta23.recursion", (2, n_max - 1), range(2, n_max), bad)
    report.seconds += sw.seconds
    return report


@dataclass(frozen=True)
class Plan:
    """Ranges for a verify run; ``n_max`` overrides every per-suite default when given."""

    system: str = "zeta5"
    n_max: int | None = None
    n: int | None = None

    def upto(self, key: str) -> int:
        return self.n_max if self.n_max is not None else DEFAULT_RANGES[key]

    @property
    def rate_n(self) -> int:
        return self.n if self.n is not None else DEFAULT_RANGES["rate_n"]


def suite(selector: str, plan: Plan) -> list[Callable[[], VerificationReport]]:
    """Deferred checks for one selector; nothing runs until they are called."""
    if selector not in SELECTORS:
        raise ValueError(f"unknown selector {selector!r}")
    if plan.system == "zeta5":
        table = {
            "signs": [
                lambda: zeta5.sign_check(plan.upto("signs")),
                lambda: zeta5.alternation_check(plan.upto("alternation")),
                lambda: auxiliary.sign_check_aux(plan.upto("aux_signs")),
            ],
            "integrality": [
                lambda: zeta5.integrality_check(plan.upto("integrality")),
                lambda: inclusion_check(plan.upto("inclusions")),
            ],
            "oracle": [
                lambda: oracle_check5(plan.upto("oracle5")),
                lambda: structure_check(plan.upto("structure")),
            ],
            "recursions": [
                lambda: auxiliary.verify_recursion_8(plan.upto("recursions")),
                lambda: auxiliary.verify_recursion_9(plan.upto("recursions")),
                auxiliary.reflection_check,
            ],
            "roots": [mu_printed_check, auxiliary.roots_check],
            "rates": [lambda: _timed("zeta5.rates", lambda: zeta5.rate_report(plan.rate_n))],
        }
    elif plan.system == "zeta23":
        table = {
            "signs": [lambda: zeta23.positivity_check23(plan.upto("alternation"))],
            "integrality": [lambda: zeta23.integrality_check23(plan.upto("integrality"))],
            "oracle": [
                lambda: zeta23.oracle_check23(plan.upto("oracle23")),
                lambda: structure_check(plan.upto("structure"), (Family.R23, Family.R23_TILDE)),
            ],
            "recursions": [lambda: recursion23_check(plan.upto("oracle23"))],
            "roots": [mu_prime_check],
            "rates": [
                lambda: _timed("zeta23.rates", lambda: zeta23.rate_report23(plan.rate_n)),
                zeta23.convergence_ratio_check,
            ],
        }
    else:
        raise ValueError(f"unknown system {plan.system!r}")
    return table[selector]


def run_selectors(selectors: Iterable[str], plan: Plan) -> list[VerificationReport]:
    """Run the selected suites; reports come back sorted by check name, then range."""
    jobs = []
    for sel in dict.fromkeys(selectors):
        jobs.extend(suite(sel, plan))
    reports = [job() for job in jobs]
    return sorted(reports, key=lambda r: (r.check, r.range or (0, 0)))


def overall(reports: Iterable[VerificationReport]) -> Status:
    statuses = {r.status for r in reports}
    if Status.FAIL in statuses:
        return Status.FAIL
    if Status.INDETERMINATE in statuses:
        return Status.INDETERMINATE
    return Status.PASS
