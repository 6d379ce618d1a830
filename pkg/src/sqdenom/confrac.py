"""Continued fractions of square roots and the first rational in an interval.

sqrt(d) has the periodic expansion [a0; p1, ..., pk, p1, ...] computed by the
classical (m, den) recurrence; the state pair repeats exactly at the period.
Two routes locate the smallest-denominator rational in an open interval
(sqrt(x), sqrt(y)): the expansion-difference rule (truncate at the first
differing partial quotient, add one to the smaller) when both endpoints are
irrational, and Stern-Brocot mediant descent, which also covers rational
endpoints and breaks denominator ties toward the smaller numerator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .exactmath import is_perfect_square, isqrt

__all__ = [
    "CFExpansion",
    "sqrt_cf",
    "convergent",
    "first_rational_between",
    "stern_brocot_between",
]


@dataclass(frozen=True)
class CFExpansion:
    """[a0; body] with the body repeating forever when periodic.

    A perfect-square radicand yields the finite expansion [a0] with an
    empty body.
    """

    a0: int
    body: tuple[int, ...]
    periodic: bool

    def terms(self) -> Iterator[int]:
        yield self.a0
        if self.periodic:
            while True:
                yield from self.body
        else:
            yield from self.body

    def __str__(self) -> str:
        if not self.body:
            return f"[{self.a0}]"
        inner = ", ".join(str(t) for t in self.body)
        if self.periodic:
            return f"[{self.a0}; ({inner})]"
        return f"[{self.a0}; {inner}]"


def sqrt_cf(d: int) -> CFExpansion:
    """Continued fraction of sqrt(d).

    m' = den*a - m, den' = (d - m'^2)/den, a' = (a0 + m')//den'; the walk
    stops when the (m, den) state first repeats, which marks one full
    period.  All divisions are exact.
    """
    if d < 1:
        raise ValueError("radicand must be >= 1")
    a0 = isqrt(d)
    if a0 * a0 == d:
        return CFExpansion(a0, (), periodic=False)
    body = []
    m_prev, den_prev, a_prev = 0, 1, a0
    first_state = None
    while True:
        m = den_prev * a_prev - m_prev
        den = (d - m * m) // den_prev
        a = (a0 + m) // den
        if first_state is None:
            first_state = (m, den)
        elif (m, den) == first_state:
            break
        body.append(a)
        m_prev, den_prev, a_prev = m, den, a
    return CFExpansion(a0, tuple(body), periodic=True)


def convergent(cf: CFExpansion, j: int) -> Fraction:
    """p_j/q_j from the first j+1 partial quotients (coprime by construction)."""
    if j < 0:
        raise IndexError("convergent index must be nonnegative")
    if not cf.periodic and j > len(cf.body):
        raise IndexError("convergent index beyond a finite expansion")
    p_prev, q_prev = 1, 0
    p, q = cf.a0, 1
    it = cf.terms()
    next(it)
    for _ in range(j):
        t = next(it)
        p, p_prev = t * p + p_prev, p
        q, q_prev = t * q + q_prev, q
    return Fraction(p, q)


def _eval_terms(terms: list[int]) -> Fraction:
    p_prev, q_prev = 1, 0
    p, q = terms[0], 1
    for t in terms[1:]:
        p, p_prev = t * p + p_prev, p
        q, q_prev = t * q + q_prev, q
    return Fraction(p, q)


def stern_brocot_between(x_radicand: int, y_radicand: int) -> Fraction:
    """Mediant descent to the first fraction inside (sqrt(x), sqrt(y)).

    Each branch decision compares the mediant p/q against an endpoint
    exactly via p*p versus d*q*q.  The first mediant strictly inside the
    interval is the unique minimal-denominator fraction, except along the
    integer spine where it is the smallest integer in the interval.
    """
    dx, dy = x_radicand, y_radicand
    if dx < 0 or dy < 0:
        raise ValueError("radicands must be nonnegative")
    if dx >= dy:
        raise ValueError("empty interval: need x < y")
    lo_n, lo_d, hi_n, hi_d = 0, 1, 1, 0
    while True:
        p, q = lo_n + hi_n, lo_d + hi_d
        if p * p <= dx * q * q:
            lo_n, lo_d = p, q
        elif p * p >= dy * q * q:
            hi_n, hi_d = p, q
        else:
            return Fraction(p, q)


def _first_by_expansion_rule(dx: int, dy: int) -> Fraction:
    gx = sqrt_cf(dx).terms()
    gy = sqrt_cf(dy).terms()
    prefix: list[int] = []
    for ax, ay in zip(gx, gy):
        if ax != ay:
            prefix.append(min(ax, ay) + 1)
            return _eval_terms(prefix)
        prefix.append(ax)
    raise AssertionError("distinct irrationals must differ at a finite index")


def first_rational_between(x_radicand: int, y_radicand: int) -> Fraction:
    """Smallest-denominator rational in the open interval (sqrt(x), sqrt(y)).

    Denominator ties (possible only among integers) resolve to the smaller
    numerator.  Both endpoint radicands may be perfect squares; the
    expansion-difference shortcut applies only when neither is.
    """
    dx, dy = x_radicand, y_radicand
    if dx < 0 or dy < 0:
        raise ValueError("radicands must be nonnegative")
    if dx >= dy:
        raise ValueError("empty interval: need x < y")
    if is_perfect_square(dx) is None and is_perfect_square(dy) is None:
        return _first_by_expansion_rule(dx, dy)
    return stern_brocot_between(dx, dy)
