"""Shared numeric oracles for the test suite.

These deliberately avoid the library's own code paths: decimal square
roots at high precision for sign checks, and a plain denominator-first
scan for minimal fractions.
"""

from decimal import Decimal, localcontext
from fractions import Fraction
from math import isqrt


def dec_sqrt(n, prec=80):
    with localcontext() as ctx:
        ctx.prec = prec
        return Decimal(n).sqrt()


def dec_surd_value(p, q, d, r, prec=80):
    with localcontext() as ctx:
        ctx.prec = prec
        return (Decimal(p) + Decimal(q) * Decimal(d).sqrt()) / Decimal(r)


def brute_first_rational(x_rad, y_rad, s_limit=10000):
    """First fraction in (sqrt(x_rad), sqrt(y_rad)) by denominator, then
    numerator.  The first hit is automatically in lowest terms."""
    for s in range(1, s_limit + 1):
        lo = x_rad * s * s
        hi = y_rad * s * s
        t = isqrt(lo) + 1
        if t * t < hi:
            return Fraction(t, s)
    raise AssertionError(f"no fraction below denominator {s_limit}")
