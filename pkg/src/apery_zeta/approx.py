"""Interval evaluation of the small linear forms q*zeta(a) - p and their growth rates."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import log_abs
from .interval import RationalInterval
from .zeta import zeta_enclosure

_LN10 = math.log(10)


def required_digits(q: Fraction, n: int, log_decay: float, margin: int = 15) -> int:
    """Digits of zeta that make q*zeta - p sign-certain at index n.

    The width q * 10**-d must sit well below |l_n| ~ exp(log_decay * n), so
    both the growth of q and the decay of the form count.
    """
    q_digits = log_abs(q) / _LN10 if q else 0.0
    return max(20, math.ceil(q_digits + abs(log_decay) * n / _LN10) + margin)


@dataclass(frozen=True)
class LinearFormValue:
    n: int
    l: RationalInterval
    lt: RationalInterval

    @property
    def resolved(self) -> bool:
        return bool(self.l.sign()) and bool(self.lt.sign())

    def log_abs_l(self) -> float:
        return log_abs(self.l.midpoint)

    def log_abs_lt(self) -> float:
        return log_abs(self.lt.midpoint)


def linear_form_values(
    q: Sequence[Fraction],
    p: Sequence[Fraction],
    pt: Sequence[Fraction],
    zeta_args: tuple[int, int],
    log_decay: float,
    max_doublings: int = 3,
    index_offset: int = 0,
) -> list[LinearFormValue]:
    """Forms q*zeta(a) - p and q*zeta(b) - pt, escalating precision until every
    sign is certified or the doubling budget runs out (left unresolved)."""
    a, b = zeta_args
    indices = range(index_offset, index_offset + len(q))
    digits = max(required_digits(qn, n, log_decay) for qn, n in zip(q, indices))
    out: list[LinearFormValue | None] = [None] * len(q)
    pending = list(range(len(q)))
    for attempt in range(max_doublings + 1):
        za, zb = zeta_enclosure(a, digits), zeta_enclosure(b, digits)
        still = []
        for i in pending:
            value = LinearFormValue(indices[i], q[i] * za - p[i], q[i] * zb - pt[i])
            out[i] = value
            if not value.resolved:
                still.append(i)
        pending = still
        if not pending:
            break
        digits *= 2
    return out  # type: ignore[return-value]


@dataclass(frozen=True)
class RateReport:
    n: int
    rates: dict[str, float | None]
    targets: dict[str, float]

    def deviation(self, key: str) -> float | None:
        rate = self.rates.get(key)
        return None if rate is None else abs(rate - self.targets[key])

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "rates": self.rates,
            "targets": self.targets,
            "deviations": {k: self.deviation(k) for k in self.rates},
        }
