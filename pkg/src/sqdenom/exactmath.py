"""Exact integer and quadratic-surd arithmetic.

Every decision made by this library reduces to integer comparisons; no
floating point is consulted anywhere.  The central value type is Surd, an
exact (p + q*sqrt(d))/r with q >= 0 and r >= 1, plus a distinguished
+infinity used for degenerate frames.  Ordering two surds is resolved by
isolate-and-square steps with explicit sign bookkeeping, which stays exact
because at most two distinct radicals ever meet in one comparison.
"""

from __future__ import annotations

import functools
from math import gcd, isqrt

__all__ = [
    "isqrt",
    "is_perfect_square",
    "Surd",
    "INFINITY",
    "floor_surd",
    "surd_cmp",
    "cmp_int_vs_sum_sqrt",
]


def is_perfect_square(n: int) -> int | None:
    """Return r with r*r == n, or None."""
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def _sieve(limit: int) -> tuple[int, ...]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = b"\x00" * len(flags[p * p :: p])
    return tuple(i for i, f in enumerate(flags) if f)


# Enough to pull every square factor out of radicands up to 10**6; larger
# radicands keep comparisons exact but may not reach the fully reduced form.
_TRIAL_PRIMES = _sieve(1000)


@functools.total_ordering
class Surd:
    """Exact (p + q*sqrt(d))/r with q >= 0, r >= 1, or +infinity.

    Construction canonicalizes: a perfect-square radicand folds into the
    integer part, square factors of d migrate into q, and gcd(p, q, r) is
    divided through.  Comparisons never rely on the canonical form.
    """

    __slots__ = ("p", "q", "d", "r", "_inf")

    def __init__(self, p: int, q: int = 0, d: int = 0, r: int = 1):
        if r <= 0:
            raise ValueError("surd denominator must be positive")
        if q < 0:
            raise ValueError("surd radical coefficient must be nonnegative")
        if d < 0:
            raise ValueError("surd radicand must be nonnegative")
        if q == 0 or d == 0:
            q = d = 0
        else:
            root = is_perfect_square(d)
            if root is not None:
                p, q, d = p + q * root, 0, 0
            else:
                for f in _TRIAL_PRIMES:
                    f2 = f * f
                    if f2 > d:
                        break
                    while d % f2 == 0:
                        d //= f2
                        q *= f
        g = gcd(p, q, r)
        if g > 1:
            p, q, r = p // g, q // g, r // g
        self.p = p
        self.q = q
        self.d = d
        self.r = r
        self._inf = False

    @classmethod
    def sqrt(cls, d: int) -> "Surd":
        return cls(0, 1, d, 1)

    @classmethod
    def _infinity(cls) -> "Surd":
        self = object.__new__(cls)
        self.p = self.q = self.d = 0
        self.r = 1
        self._inf = True
        return self

    @property
    def is_infinite(self) -> bool:
        return self._inf

    def floor(self) -> int:
        return floor_surd(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Surd):
            return NotImplemented
        return surd_cmp(self, other) == 0

    def __lt__(self, other) -> bool:
        if not isinstance(other, Surd):
            return NotImplemented
        return surd_cmp(self, other) < 0

    def __hash__(self):
        raise TypeError("Surd is not hashable")

    def __repr__(self) -> str:
        if self._inf:
            return "Surd(+inf)"
        if self.q == 0:
            return f"Surd({self.p}/{self.r})" if self.r != 1 else f"Surd({self.p})"
        return f"Surd(({self.p}+{self.q}*sqrt({self.d}))/{self.r})"


INFINITY = Surd._infinity()


def floor_surd(x: Surd) -> int:
    """floor((p + q*sqrt(d))/r), computed exactly.

    With u = isqrt(q*q*d) write the value as (p + u + theta)/r for some
    theta in [0, 1).  p + u is an integer and the interval (p+u, p+u+theta]
    contains no integer, hence no multiple of r either, so the floor equals
    (p + u) // r.
    """
    if x._inf:
        raise ValueError("floor of +infinity")
    return (x.p + isqrt(x.q * x.q * x.d)) // x.r


def _sgn(n: int) -> int:
    return (n > 0) - (n < 0)


def _sign_linear(k: int, l: int, d: int) -> int:
    """Exact sign of k + l*sqrt(d); l may be negative."""
    if l == 0 or d == 0:
        return _sgn(k)
    if l > 0:
        if k >= 0:
            return 1
        return _sgn(l * l * d - k * k)
    if k <= 0:
        return -1
    return _sgn(k * k - l * l * d)


def _sign_two_radicals(k: int, b: int, d1: int, e: int, d2: int) -> int:
    """Exact sign of k + b*sqrt(d1) - e*sqrt(d2) with b, e >= 0."""
    if b == 0 or d1 == 0:
        return _sign_linear(k, -e, d2)
    if e == 0 or d2 == 0:
        return _sign_linear(k, b, d1)
    # u = k + b*sqrt(d1) versus v = e*sqrt(d2) > 0
    su = _sign_linear(k, b, d1)
    if su <= 0:
        return -1
    # both positive: sign(u^2 - v^2) = sign(2kb*sqrt(d1) - w)
    w = e * e * d2 - k * k - b * b * d1
    return _sign_linear(-w, 2 * k * b, d1)


def surd_cmp(x: Surd, y: Surd) -> int:
    """Total order on surds: -1, 0 or +1.  +infinity exceeds every finite value."""
    if x._inf or y._inf:
        if x._inf and y._inf:
            return 0
        return 1 if x._inf else -1
    k = x.p * y.r - y.p * x.r
    return _sign_two_radicals(k, x.q * y.r, x.d, y.q * x.r, y.d)


def cmp_int_vs_sum_sqrt(s: int, k: int, a: int) -> int:
    """Exact sign of s - k*(sqrt(a) + sqrt(a+1)).

    Never zero: a*a + a lies strictly between consecutive squares for
    a >= 1, so the sum of roots is irrational.  Squaring once reduces the
    question to s*s versus k*k*(2a+1) + 2*k*k*sqrt(a*a+a); squaring again
    settles it in integers.
    """
    if a < 1:
        raise ValueError("a must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    if s < 0:
        raise ValueError("s must be nonnegative")
    lhs = s * s - k * k * (2 * a + 1)
    if lhs <= 0:
        return -1
    return 1 if lhs * lhs > 4 * k**4 * (a * a + a) else -1
