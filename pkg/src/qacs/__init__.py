"""Exact verification of limit identities for q-polynomials defined by
a_n(q) = f(n) + (1 - q^(n-1)) a_{n-1}(q)."""

from .exact import CyclotomicNumber, Rational, cyc_invert, cyclotomic_polynomial, rational_part, zeta_power
from .series import TruncatedSeries

__version__ = "0.1.0"
