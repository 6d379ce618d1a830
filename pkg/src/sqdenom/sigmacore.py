"""Locating integer squares between s^2*a and s^2*(a+1).

tau(a, s) counts the integers t with s^2*a < t^2 < s^2*(a+1); sigma(a) is
the least s >= 2 with tau(a, s) > 0, equivalently the denominator of the
first rational whose square lands in (a, a+1) when rationals are ordered by
denominator first.  Everything is phrased in the frame

    n = floor(sqrt(a)),  a = n^2 + b  (0 <= b <= 2n),
    m = n + 1,           a = m^2 - c  (1 <= c <= 2m-1),

which exposes the exact bounding curves

    sigma_l(a) = (n + sqrt(a+1)) / (b+1),
    sigma_r(a) = (m + sqrt(a))   / c,
    sigma_k(a) = floor(max(k*sigma_l, k*sigma_r)) + 1,

with sigma_1(a) <= sigma(a) <= isqrt(4a+2) + 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .confrac import first_rational_between
from .exactmath import INFINITY, Surd, is_perfect_square, isqrt, surd_cmp

__all__ = [
    "Decomposition",
    "decompose",
    "tau",
    "tau_brute",
    "t_set",
    "sigma",
    "sigma_scan",
    "sigma_l",
    "sigma_r",
    "sigma_k",
    "sigma_lower",
    "sigma_upper",
    "on_bound_criterion",
    "min_k",
    "ZeroWindow",
    "zero_windows",
]


@dataclass(frozen=True)
class Decomposition:
    a: int
    n: int
    b: int
    m: int
    c: int


def decompose(a: int) -> Decomposition:
    """Frame a between its neighbouring squares: a = n^2 + b = m^2 - c.

    a = 0 degenerates gracefully to n = b = 0, m = c = 1.
    """
    if a < 0:
        raise ValueError("a must be >= 0")
    n = isqrt(a)
    b = a - n * n
    m = n + 1
    c = m * m - a
    return Decomposition(a, n, b, m, c)


def _check_pair(a: int, s: int) -> None:
    if a < 0:
        raise ValueError("a must be >= 0")
    if s < 1:
        raise ValueError("s must be >= 1")


def tau(a: int, s: int) -> int:
    """Number of integers t with s^2*a < t^2 < s^2*(a+1).

    isqrt(s^2*(a+1)) - isqrt(s^2*a) counts squares in the half-open window
    (s^2*a, s^2*(a+1)]; the upper end is itself a square exactly when a+1
    is, in which case one candidate must be dropped to keep both
    inequalities strict.
    """
    _check_pair(a, s)
    hi = isqrt(s * s * (a + 1))
    if is_perfect_square(a + 1) is not None:
        hi -= 1
    return hi - isqrt(s * s * a)


def tau_brute(a: int, s: int) -> int:
    """Oracle for tau: walk t upward, both strictness checks explicit."""
    _check_pair(a, s)
    lo = s * s * a
    hi = s * s * (a + 1)
    t = isqrt(lo) + 1
    count = 0
    while t * t < hi:
        if t * t > lo:
            count += 1
        t += 1
    return count


def t_set(a: int, s: int) -> list[int]:
    """The witnesses themselves: ascending t with s^2*a < t^2 < s^2*(a+1)."""
    _check_pair(a, s)
    lo = s * s * a
    hi = s * s * (a + 1)
    t_lo = isqrt(lo) + 1
    t_hi = isqrt(hi)
    if t_hi * t_hi == hi:
        t_hi -= 1
    return list(range(t_lo, t_hi + 1))


def sigma_l(a: int) -> Surd:
    """(n + sqrt(a+1)) / (b+1): left crowding threshold, always finite."""
    dc = decompose(a)
    return Surd(dc.n, 1, a + 1, dc.b + 1)


def sigma_r(a: int) -> Surd:
    """(m + sqrt(a)) / c: right crowding threshold, always finite."""
    dc = decompose(a)
    return Surd(dc.m, 1, a, dc.c)


def sigma_k(a: int, k: int) -> int:
    """floor(max(k*sigma_l(a), k*sigma_r(a))) + 1, in pure integers.

    floor((k*n + k*sqrt(a+1))/(b+1)) equals (k*n + isqrt(k^2*(a+1)))//(b+1)
    because no integer fits between the exact numerator and its floor (same
    argument as floor_surd); likewise on the right.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    dc = decompose(a)
    left = (k * dc.n + isqrt(k * k * (a + 1))) // (dc.b + 1)
    right = (k * dc.m + isqrt(k * k * a)) // dc.c
    return max(left, right) + 1


def sigma_lower(a: int) -> int:
    return sigma_k(a, 1)


def sigma_upper(a: int) -> int:
    """ceil(sqrt(a) + sqrt(a+1)) = isqrt(4a+2) + 1 for a >= 1.

    floor(sqrt(a) + sqrt(a+1)) = floor(sqrt(4a+2)) since the squared sum
    lies in (4a+1, 4a+2) and 4a+2 is never a perfect square; the sum is
    irrational for a >= 1, so its ceiling is that floor plus one.  At
    a = 0 the formula returns 2, which still bounds sigma(0) = 2.
    """
    if a < 0:
        raise ValueError("a must be >= 0")
    return isqrt(4 * a + 2) + 1


def sigma_scan(a: int, start: int | None = None) -> int:
    """Least s with tau(a, s) > 0, scanning upward from start.

    The default start is sigma_lower(a), which never overshoots; passing
    start=2 re-derives the same value the slow way.
    """
    if a < 0:
        raise ValueError("a must be >= 0")
    s = sigma_lower(a) if start is None else start
    if s < 2:
        s = 2
    while tau(a, s) == 0:
        s += 1
    return s


def sigma(a: int, strategy: str = "scan") -> int:
    """Least denominator s >= 2 such that some t/s squares into (a, a+1)."""
    if strategy == "scan":
        return sigma_scan(a)
    if strategy == "cf":
        if a < 0:
            raise ValueError("a must be >= 0")
        return first_rational_between(a, a + 1).denominator
    raise ValueError(f"unknown strategy: {strategy!r}")


def on_bound_criterion(a: int) -> bool:
    """Whether sigma(a) attains the lower bound sigma_1(a).

    Holds iff floor(sigma_l) drops when b steps down or floor(sigma_r)
    drops when c steps down, both evaluated in a's own frame: the left
    probe is (n + sqrt(a))/b, the right probe (m + sqrt(a+1))/(c-1).  A
    zero shifted denominator counts as +infinity, making the drop trivially
    true.  Re-deriving the probes from decompose(a-1)/decompose(a+1)
    instead would change frames at b = 0 / c = 1 and get this wrong.
    """
    if a < 2:
        raise ValueError("a must be >= 2")
    dc = decompose(a)
    left = dc.b == 0 or (
        (dc.n + isqrt(a + 1)) // (dc.b + 1) < (dc.n + isqrt(a)) // dc.b
    )
    right = dc.c == 1 or (
        (dc.m + isqrt(a)) // dc.c < (dc.m + isqrt(a + 1)) // (dc.c - 1)
    )
    return left or right


def min_k(a: int) -> int:
    """Least k >= 1 with sigma_k(a) = sigma(a).

    Bounded by sigma(a): sigma_k >= k+1 always, so larger k cannot match.
    """
    s = sigma(a)
    for k in range(1, s + 1):
        if sigma_k(a, k) == s:
            return k
    raise RuntimeError(f"no curve index k <= {s} matches sigma({a})")


@dataclass(frozen=True, eq=False)
class ZeroWindow:
    """Closed interval [lo, hi] of s-values with tau(a, s) = 0."""

    k: int
    lo: Surd
    hi: Surd
    side: str  # "left-crowding" | "right-crowding"


def zero_windows(a: int, k_max: int) -> list[ZeroWindow]:
    """All crowding windows with offset k <= k_max, empty ones dropped.

    Left crowding at offset k pins floor(s*sqrt(a)) to s*n + k and forces
    tau(a, s) = 0 for k*(n+sqrt(a))/b <= s <= (k+1)*(n+sqrt(a+1))/(b+1);
    right crowding mirrors it with m and c.  At k = 0 the lower constraint
    is vacuous (endpoint 0); a zero denominator with k >= 1 means the
    window is empty (+infinity lower endpoint, never emitted).
    """
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    dc = decompose(a)
    zero = Surd(0)
    out: list[ZeroWindow] = []
    for k in range(k_max + 1):
        hi = Surd((k + 1) * dc.n, k + 1, a + 1, dc.b + 1)
        if k == 0:
            lo = zero
        elif dc.b == 0:
            lo = INFINITY
        else:
            lo = Surd(k * dc.n, k, a, dc.b)
        if surd_cmp(lo, hi) <= 0:
            out.append(ZeroWindow(k, lo, hi, "left-crowding"))

        hi = Surd((k + 1) * dc.m, k + 1, a, dc.c)
        if k == 0:
            lo = zero
        elif dc.c == 1:
            lo = INFINITY
        else:
            lo = Surd(k * dc.m, k, a + 1, dc.c - 1)
        if surd_cmp(lo, hi) <= 0:
            out.append(ZeroWindow(k, lo, hi, "right-crowding"))
    return out
