"""Integer helpers: lcm(1..n), Bernoulli numbers, truncated decimals, logs."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Union

from .interval import RationalInterval


def primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, n + 1, p)))
    return [p for p in range(n + 1) if sieve[p]]


def lcm_upto(n: int) -> int:
    """Return D_n = lcm(1, 2, ..., n) as the product of maximal prime powers <= n."""
    if n < 1:
        raise ValueError(f"lcm_upto needs n >= 1, got {n}")
    result = 1
    for p in primes_upto(n):
        pk = p
        while pk * p <= n:
            pk *= p
        result *= pk
    return result


def lcm_sequence(n_max: int) -> Iterator[int]:
    """Yield D_1, ..., D_{n_max} incrementally.

    D_{m} = D_{m-1} * p exactly when m is a power of the prime p.
    """
    d = 1
    for m in range(1, n_max + 1):
        p = _prime_of_prime_power(m)
        if p:
            d *= p
        yield d


def _prime_of_prime_power(m: int) -> int:
    if m < 2:
        return 0
    p = next((q for q in range(2, math.isqrt(m) + 1) if m % q == 0), m)
    while m % p == 0:
        m //= p
    return p if m == 1 else 0


@lru_cache(maxsize=None)
def _tangent_numbers(count: int) -> tuple[int, ...]:
    # Brent-Harvey in-place recurrence; entry k is the tangent number T_k.
    t = [0] * (count + 1)
    if count >= 1:
        t[1] = 1
    for k in range(2, count + 1):
        t[k] = (k - 1) * t[k - 1]
    for k in range(2, count + 1):
        for j in range(k, count + 1):
            t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j]
    return tuple(t)


def bernoulli_even(m: int) -> list[Fraction]:
    """Return [B_0, B_2, ..., B_{2m}]."""
    t = _tangent_numbers(m)
    out = [Fraction(1)]
    for k in range(1, m + 1):
        out.append(Fraction((-1) ** (k - 1) * 2 * k * t[k], 4**k * (4**k - 1)))
    return out


def bernoulli(index: int) -> Fraction:
    """Exact Bernoulli number B_index for even index >= 0."""
    if index < 0 or index % 2:
        raise ValueError(f"only even nonnegative Bernoulli indices are supported, got {index}")
    return bernoulli_even(index // 2)[-1]


def _truncate(x: Fraction, digits: int) -> str:
    sign = "-" if x < 0 else ""
    scaled = abs(x.numerator) * 10**digits // x.denominator
    whole, frac = divmod(scaled, 10**digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def to_decimal(x: Union[int, Fraction, RationalInterval], digits: int) -> str:
    """Fixed-point rendering with ``digits`` decimals, truncated toward zero.

    An interval renders as ``m±r``: ``m`` keeps the decimal digits both
    endpoints agree on, ``r`` is rounded up so that ``[m-r, m+r]`` still
    encloses the interval.
    """
    if digits < 0:
        raise ValueError("digits must be >= 0")
    if not isinstance(x, RationalInterval):
        return _truncate(Fraction(x), digits)
    if x.lo == x.hi:
        return _truncate(x.lo, digits)
    a, b = _truncate(x.lo, digits), _truncate(x.hi, digits)
    common = 0
    while common < min(len(a), len(b)) and a[common] == b[common]:
        common += 1
    prefix = a[:common]
    if "." in prefix and not prefix.endswith("."):
        kept = len(prefix) - prefix.index(".") - 1
        center = _truncate(x.lo, kept)
    else:
        center = _truncate(x.midpoint, 0)
    m = Fraction(center)
    radius = max(x.hi - m, m - x.lo)
    scale = 10**digits
    r = Fraction(-((-radius.numerator * scale) // radius.denominator), scale)
    return f"{center}±{_truncate(r, digits)}"


def log_abs(x: Union[int, Fraction]) -> float:
    """Natural log of |x| for arbitrarily large or small exact rationals.

    ``math.log`` on a Python int extracts the binary exponent itself, so the
    numerator and denominator never go through a float conversion.
    """
    x = Fraction(x)
    if x == 0:
        raise ValueError("log of zero")
    return math.log(abs(x.numerator)) - math.log(x.denominator)
