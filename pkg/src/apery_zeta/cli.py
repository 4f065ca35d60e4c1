"""Command-line front end: ``apery-zeta <compute|table|verify|bench>``.

Exit codes: 0 all checks pass, 1 a check failed or stayed indeterminate,
2 usage error, 3 the APERY_ZETA_MAX_BITS budget was exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import checks, gosper, zeta5, zeta23
from .arith import to_decimal
from .recurrence import BitBudgetExceeded
from .report import Status, jsonable

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BITS = 0, 1, 2, 3
MAX_BITS_ENV = "APERY_ZETA_MAX_BITS"
TABLE_CAP = 1000


@dataclass(frozen=True)
class RunConfig:
    command: str
    system: str = "zeta5"
    n: int | None = None
    n_max: int | None = None
    digits: int = 30
    format: str = "text"
    selectors: tuple[str, ...] = ()
    paper_annotate: bool = False
    max_bits: int | None = None


# ---------------------------------------------------------------------------
# certified decimal expansions


@dataclass(frozen=True)
class Certified:
    name: str
    n: int
    digits: int
    text: str
    error_bound: Fraction


def _certify(value: Fraction, error_hi: Fraction, digits: int) -> str | None:
    """Decimal truncation of the constant to ``digits`` places if the enclosure
    value +- error_hi pins it down, else None."""
    lo = to_decimal(value - error_hi, digits)
    hi = to_decimal(value + error_hi, digits)
    return lo if lo == hi else None


def _start_index(digits: int, log_gap: float) -> int:
    # error ~ exp(-log_gap * n)
    return max(1, math.floor(digits * math.log(10) / log_gap) - 2)


def compute_zeta5(digits: int, max_bits: int | None = None) -> list[Certified]:
    n = _start_index(digits, abs(zeta5.LOG_MU2) + math.log(2368.3))
    while True:
        if max_bits is not None:
            zeta5.sequences(max(n, 2), max_bits=max_bits)
        approx = zeta5.approximation(n)
        text = _certify(approx.value, approx.error.hi, digits)
        if text is not None:
            return [Certified("zeta(5)", n, digits, text, approx.error.hi)]
        n += 1


def compute_zeta23(digits: int, max_bits: int | None = None) -> list[Certified]:
    n = _start_index(digits, abs(zeta23.LOG_MU2) + math.log(219.85))
    while True:
        if max_bits is not None:
            zeta23.sequences23(max(n, 2), max_bits=max_bits)
        approx = zeta23.approximation23(n)
        t3 = _certify(approx.zeta3, approx.error3.hi, digits)
        t2 = _certify(approx.zeta2, approx.error2.hi, digits)
        if t3 is not None and t2 is not None:
            return [
                Certified("zeta(3)", n, digits, t3, approx.error3.hi),
                Certified("zeta(2)", n, digits, t2, approx.error2.hi),
            ]
        n += 1


# ---------------------------------------------------------------------------
# commands


def _emit(cfg: RunConfig, payload: dict, text_lines: Sequence[str]) -> None:
    if cfg.format == "json":
        sys.stdout.write(json.dumps(jsonable(payload), sort_keys=True, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def cmd_compute(cfg: RunConfig) -> int:
    fn = compute_zeta5 if cfg.system == "zeta5" else compute_zeta23
    results = fn(cfg.digits, cfg.max_bits)
    payload = {
        "system": cfg.system,
        "digits": cfg.digits,
        "values": [
            {"constant": r.name, "n": r.n, "value": r.text, "error_bound": zeta5._sci(r.error_bound)}
            for r in results
        ],
    }
    lines = [f"{r.name} = {r.text}...  (n={r.n}, |error| <= {zeta5._sci(r.error_bound)})" for r in results]
    _emit(cfg, payload, lines)
    return EXIT_OK


def cmd_table(cfg: RunConfig) -> int:
    n_max = cfg.n_max if cfg.n_max is not None else 50
    if n_max > TABLE_CAP:
        raise _Usage(f"--n-max for table is capped at {TABLE_CAP}")
    if cfg.max_bits is not None:
        zeta5.sequences(max(n_max, 2), max_bits=cfg.max_bits)
    rows = [zeta5.table_row(n) for n in range(n_max + 1)]
    lines = []
    for row in rows:
        line = f"{row['n']:>4}  {row['fraction']}  {row['error_decimal']}"
        if "status" in row:
            pub = row["published"]
            line += f"  {row['status']}"
            if cfg.paper_annotate:
                shown = pub["value"] if pub["kind"] == "trunc" else "< " + pub["value"]
                line += f"  (printed: {shown})"
        lines.append(line)
    for row in rows:
        row.pop("error", None)
        if not cfg.paper_annotate:
            row.pop("published", None)
    failed = any(row.get("status") == Status.FAIL.value for row in rows)
    _emit(cfg, {"system": "zeta5", "rows": rows}, lines)
    return EXIT_FAIL if failed else EXIT_OK


_PUBLISHED = {
    "zeta5.roots": {"mu": list(checks.MU_PRINTED)},
    "zeta23.roots": {"mu3'": checks.MU3_PRIME_PRINTED, "log|mu2'|": checks.LOG_MU2_PRIME_PRINTED},
    "zeta5.rates": {"log|mu2|": zeta5.LOG_MU2},
    "zeta23.rates": {"log|mu2'|": zeta23.LOG_MU2},
}


def cmd_verify(cfg: RunConfig) -> int:
    plan = checks.Plan(cfg.system, cfg.n_max, cfg.n)
    if cfg.max_bits is not None:
        biggest = max(plan.upto("integrality"), plan.rate_n, 200)
        seq = zeta5.sequences if cfg.system == "zeta5" else zeta23.sequences23
        seq(biggest, max_bits=cfg.max_bits)
    reports = checks.run_selectors(cfg.selectors, plan)
    if cfg.paper_annotate:
        for r in reports:
            if r.check in _PUBLISHED:
                r.details = {**r.details, "published": _PUBLISHED[r.check]}
    status = checks.overall(reports)
    payload = {"system": cfg.system, "status": status.value, "reports": [r.to_dict() for r in reports]}
    lines = [r.line() for r in reports] + [f"overall: {status.value}"]
    _emit(cfg, payload, lines)
    return EXIT_OK if status is Status.PASS else EXIT_FAIL


def cmd_bench(cfg: RunConfig) -> int:
    N = cfg.n_max if cfg.n_max is not None else 100
    n = cfg.n if cfg.n is not None else 20
    if N < 1:
        raise _Usage("bench needs --n-max >= 1 matrix factors")
    if cfg.max_bits is not None:
        zeta5.sequences(max(n, 2), max_bits=cfg.max_bits)
    report = gosper.compare_with_recursion(N, n)
    d = report.to_dict()
    lines = [
        f"gosper    N={N:<5} zeta(5) digits {d['gosper_digits']['zeta5']:>4}  "
        f"zeta(3) digits {d['gosper_digits']['zeta3']:>4}  max bits {d['gosper_bits']}",
        f"recursion n={n:<5} zeta(5) digits {d['recursion_digits']['zeta5']:>4}  "
        f"zeta(3) digits {d['recursion_digits']['zeta3']:>4}  max bits {d['recursion_bits']}",
        f"ahead: {d['leader']}",
    ]
    _emit(cfg, d, lines)
    return EXIT_OK


COMMANDS = {"compute": cmd_compute, "table": cmd_table, "verify": cmd_verify, "bench": cmd_bench}


# ---------------------------------------------------------------------------
# argument handling


class _Usage(Exception):
    pass


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apery-zeta",
        description="Exact third-order recursions for zeta(5), zeta(3) and zeta(2), "
        "checked against a hypergeometric-series oracle.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("selectors", nargs="*", metavar="selector",
                        help=f"verify suites: {', '.join(checks.SELECTORS)}")
    parser.add_argument("--system", choices=checks.SYSTEMS, default="zeta5")
    parser.add_argument("--n", type=_nonneg, help="index for rates (verify) or the recursion (bench)")
    parser.add_argument("--n-max", type=_nonneg, help="upper end of table rows, check ranges, or Gosper factors (bench)")
    parser.add_argument("--digits", type=_positive, default=30, help="decimal places for compute")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--all", action="store_true", help="run every verify suite")
    parser.add_argument("--paper-annotate", action="store_true",
                        help="attach the published constants to table rows and reports")
    return parser


def parse_config(argv: Sequence[str] | None = None) -> RunConfig:
    parser = build_parser()
    args = parser.parse_args(argv)
    unknown = [s for s in args.selectors if s not in checks.SELECTORS]
    if unknown:
        parser.error(f"unknown selector(s): {', '.join(unknown)}")
    if args.command == "verify":
        if args.all and args.selectors:
            parser.error("give either --all or selectors, not both")
        if not args.all and not args.selectors:
            parser.error("verify needs --all or at least one selector")
        selectors = checks.SELECTORS if args.all else tuple(args.selectors)
    else:
        if args.selectors or args.all:
            parser.error(f"{args.command} takes no selectors")
        selectors = ()
    if args.command == "table" and args.system != "zeta5":
        parser.error("table is only defined for --system zeta5")
    max_bits = None
    raw = os.environ.get(MAX_BITS_ENV)
    if raw:
        try:
            max_bits = int(raw)
        except ValueError:
            parser.error(f"{MAX_BITS_ENV} must be an integer, got {raw!r}")
    return RunConfig(
        command=args.command,
        system=args.system,
        n=args.n,
        n_max=args.n_max,
        digits=args.digits,
        format=args.format,
        selectors=tuple(selectors),
        paper_annotate=args.paper_annotate,
        max_bits=max_bits,
    )


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:  # argparse reports usage errors this way
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return COMMANDS[cfg.command](cfg)
    except _Usage as exc:
        sys.stderr.write(f"apery-zeta: error: {exc}\n")
        return EXIT_USAGE
    except BitBudgetExceeded as exc:
        sys.stderr.write(f"apery-zeta: {exc}\n")
        return EXIT_BITS


if __name__ == "__main__":
    sys.exit(main())
