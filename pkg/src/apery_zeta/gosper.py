"""Baseline: the infinite product of upper-triangular 3x3 matrices

    prod_{n>=1} [[-n/(2(2n+1)), 1/(2n(2n+1)), 1/n^4],
                 [0,            -n/(2(2n+1)), 5/(4n^2)],
                 [0,            0,            1       ]]

whose third column tends to (zeta(5), zeta(3), 1). The diagonal shrinks by
n/(2(2n+1)) < 1/4 per factor, so the prefix product gains about 0.6 digits
per step. Errors here are measured a posteriori against zeta_enclosure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .report import Status, VerificationReport, stopwatch
from .zeta import zeta_enclosure
from .zeta5 import sequences

Row = tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class Mat3:
    rows: tuple[Row, Row, Row]

    @classmethod
    def identity(cls) -> Mat3:
        one, zero = Fraction(1), Fraction(0)
        return cls(((one, zero, zero), (zero, one, zero), (zero, zero, one)))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: Mat3) -> Mat3:
        a, b = self.rows, other.rows
        return Mat3(tuple(
            tuple(sum((a[i][k] * b[k][j] for k in range(3)), Fraction(0)) for j in range(3))
            for i in range(3)
        ))  # type: ignore[arg-type]

    @property
    def upper_triangular(self) -> bool:
        return self[1, 0] == self[2, 0] == self[2, 1] == 0

    @property
    def column3(self) -> Row:
        return (self[0, 2], self[1, 2], self[2, 2])

    def max_bits(self) -> int:
        return max(max(x.numerator.bit_length(), x.denominator.bit_length()) for r in self.rows for x in r)


def factor(n: int) -> Mat3:
    if n < 1:
        raise ValueError("factors are indexed from n = 1")
    d = Fraction(-n, 2 * (2 * n + 1))
    zero = Fraction(0)
    return Mat3((
        (d, Fraction(1, 2 * n * (2 * n + 1)), Fraction(1, n**4)),
        (zero, d, Fraction(5, 4 * n * n)),
        (zero, zero, Fraction(1)),
    ))


def prefix_product(N: int) -> Mat3:
    """factor(1) @ factor(2) @ ... @ factor(N), left to right."""
    if N < 1:
        raise ValueError("N must be >= 1")
    m = factor(1)
    for n in range(2, N + 1):
        m = m @ factor(n)
    return m


def tree_product(lo: int, hi: int) -> Mat3:
    """factor(lo) @ ... @ factor(hi) by balanced splitting (same value, smaller operands)."""
    if lo > hi:
        return Mat3.identity()
    if lo == hi:
        return factor(lo)
    mid = (lo + hi) // 2
    return tree_product(lo, mid) @ tree_product(mid + 1, hi)


def _correct_digits(error_hi: Fraction) -> int:
    """floor(-log10 |error|) from an upper bound, clipped at 0."""
    if error_hi <= 0:
        raise ValueError("error bound must be positive")
    if error_hi >= 1:
        return 0
    d = math.floor(-(math.log(error_hi.numerator) - math.log(error_hi.denominator)) / math.log(10))
    # guard against float rounding at exact powers of ten
    while d > 0 and error_hi * 10**d > 1:
        d -= 1
    while error_hi * 10 ** (d + 1) <= 1:
        d += 1
    return d


@dataclass(frozen=True)
class BenchReport:
    N: int
    n: int
    gosper_digits: dict[str, int]
    recursion_digits: dict[str, int]
    gosper_bits: int
    recursion_bits: int

    @property
    def leader(self) -> str:
        g, r = self.gosper_digits["zeta5"], self.recursion_digits["zeta5"]
        return "tie" if g == r else ("recursion" if r > g else "gosper")

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "n": self.n,
            "gosper_digits": dict(self.gosper_digits),
            "recursion_digits": dict(self.recursion_digits),
            "gosper_bits": self.gosper_bits,
            "recursion_bits": self.recursion_bits,
            "leader": self.leader,
        }


def compare_with_recursion(N: int, n: int) -> BenchReport:
    """Correct decimal digits of zeta(5) and zeta(3) from N matrix factors vs.
    recursion index n, with the largest numerator/denominator bit size as a cost proxy."""
    if N < 1 or n < 0:
        raise ValueError("need N >= 1 and n >= 0")
    m = prefix_product(N)
    seq = sequences(max(n, 2))
    q, p, pt = seq.q[n], seq.p[n], seq.pt[n]
    # Gosper error ~ 4**-N; recursion error ~ exp(-1.09 n) / q_n with q_n ~ exp(7.8 n)
    digits = 30 + math.ceil(0.61 * N) + math.ceil(4.0 * n)
    z5, z3 = zeta_enclosure(5, digits), zeta_enclosure(3, digits)

    def digits_of(approx: Fraction, z) -> int:
        err = abs(z - approx)
        return _correct_digits(err.hi)

    return BenchReport(
        N,
        n,
        {"zeta5": digits_of(m[0, 2], z5), "zeta3": digits_of(m[1, 2], z3)},
        {"zeta5": digits_of(p / q, z5), "zeta3": digits_of(pt / q, z3)},
        m.max_bits(),
        max(max(x.numerator.bit_length(), x.denominator.bit_length()) for x in (q, p, pt)),
    )


def gosper_check(N_max: int = 200) -> VerificationReport:
    """Triangular shape, unit corner, monotone zeta(3) and zeta(5) errors for 2 <= N <= N_max."""
    failure = None
    with stopwatch() as sw:
        digits = 30 + math.ceil(0.61 * N_max)
        z5, z3 = zeta_enclosure(5, digits), zeta_enclosure(3, digits)
        m = factor(1)
        prev = None
        for N in range(1, N_max + 1):
            if N > 1:
                m = m @ factor(N)
            if not m.upper_triangular or m[2, 2] != 1:
                failure = {"N": N, "reason": "shape"}
                break
            errs = (abs(z5 - m[0, 2]), abs(z3 - m[1, 2]))
            if prev is not None and N >= 2:
                for name, e, e_prev in zip(("zeta5", "zeta3"), errs, prev):
                    if not e.hi < e_prev.lo:
                        failure = {"N": N, "reason": f"{name} error did not decrease"}
                        break
            if failure:
                break
            prev = errs
    status = Status.FAIL if failure else Status.PASS
    return VerificationReport("gosper.monotone", (1, N_max), status, failure, sw.seconds)
