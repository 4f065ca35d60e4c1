"""Certified enclosures of zeta(s) at integers s >= 2 by Euler-Maclaurin summation.

For f(x) = x**-s every derivative has constant sign, so the remainder after
the last Bernoulli correction is bounded by the first omitted term. The head
sum is accumulated in binary fixed point with explicit floor/ceil rounding,
which keeps the enclosure rigorous without huge exact denominators.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

from .arith import bernoulli_even
from .interval import RationalInterval


class PrecisionError(RuntimeError):
    """A requested enclosure could not be certified within the work budget."""


_MIN_TERMS = 64
_MAX_GUARD = 200

_lock = threading.Lock()
_finest: dict[int, tuple[int, RationalInterval]] = {}


def _raw_enclosure(s: int, digits: int) -> tuple[Fraction, Fraction]:
    target = Fraction(1, 10 ** (digits + 2))
    n_terms = max(_MIN_TERMS, 2 * digits)
    while True:
        result = _try_euler_maclaurin(s, digits, n_terms, target)
        if result is not None:
            return result
        n_terms *= 2


def _try_euler_maclaurin(s: int, digits: int, K: int, target: Fraction):
    # Bernoulli budget: enough orders for the estimate below, rounded up so
    # repeated calls share the cached tangent numbers.
    budget = 64 * (digits // 128 + 2)
    bern = bernoulli_even(budget)

    corrections = Fraction(0)
    rising = Fraction(s)  # s (s+1) ... (s+2m-2)
    factorial = 1  # (2m)!
    prev = None
    omitted = None
    for m in range(1, budget + 1):
        if m > 1:
            rising *= (s + 2 * m - 3) * (s + 2 * m - 2)
        factorial *= (2 * m - 1) * (2 * m)
        term = bern[m] * rising / (factorial * Fraction(K) ** (s + 2 * m - 1))
        if abs(term) < target:
            omitted = abs(term)
            break
        if prev is not None and abs(term) >= prev:
            return None  # asymptotic series turned around: need a larger K
        corrections += term
        prev = abs(term)
    if omitted is None:
        return None

    bits = math.ceil((digits + 4) * math.log2(10)) + K.bit_length() + 8
    one = 1 << bits
    head_lo = sum(one // k**s for k in range(1, K))
    head_hi = head_lo + (K - 1)  # each floor lost less than one unit
    tail = Fraction(1, (s - 1) * K ** (s - 1)) + Fraction(1, 2 * K**s) + corrections
    lo = Fraction(head_lo, one) + tail - omitted
    hi = Fraction(head_hi, one) + tail + omitted
    return lo, hi


def _cell(s: int, digits: int) -> RationalInterval:
    scale = 10**digits
    guard = 4
    while guard <= _MAX_GUARD:
        lo, hi = _raw_enclosure(s, digits + guard)
        a = lo.numerator * scale // lo.denominator
        b = hi.numerator * scale // hi.denominator
        if a == b:
            return RationalInterval(Fraction(a, scale), Fraction(a + 1, scale))
        guard += 16
    raise PrecisionError(f"zeta({s}) sits on a decimal boundary at {digits} digits")


def zeta_enclosure(s: int, digits: int) -> RationalInterval:
    """Return the decimal cell ``[c/10**digits, (c+1)/10**digits]`` containing zeta(s).

    The lower endpoint is zeta(s) truncated to ``digits`` decimals. Because
    the answer is the unique grid cell holding zeta(s), enclosures at more
    digits always nest inside those at fewer digits.
    """
    if s <= 1:
        raise ValueError(f"zeta(s) needs s >= 2, got {s}")
    if digits < 1:
        raise ValueError("digits must be positive")
    with _lock:
        known = _finest.get(s)
    if known is not None and known[0] >= digits:
        fine = known[1]
        scale = 10**digits
        a = fine.lo.numerator * scale // fine.lo.denominator
        return RationalInterval(Fraction(a, scale), Fraction(a + 1, scale))
    cell = _cell(s, digits)
    with _lock:
        known = _finest.get(s)
        if known is None or known[0] < digits:
            _finest[s] = (digits, cell)
    return cell

