"""Exact-arithmetic Apéry-like recursions for zeta(5), zeta(3) and zeta(2).

The package computes rational approximations from third-order linear
recurrences with polynomial coefficients and cross-checks them against
partial-fraction expansions of very-well-poised hypergeometric series.
Everything in the core is done over the rationals; floating point only
appears when reporting logarithmic growth rates.
"""

from .arith import bernoulli, lcm_upto, log_abs, to_decimal
from .interval import RationalInterval
from .polynomial import IntPolynomial, isolate_real_roots
from .zeta import zeta_enclosure

__all__ = [
    "IntPolynomial",
    "RationalInterval",
    "bernoulli",
    "isolate_real_roots",
    "lcm_upto",
    "log_abs",
    "to_decimal",
    "zeta_enclosure",
]

__version__ = "0.1.0"
