"""Batch sweeps and the empirical harness built on the core counters.

Observation-style checks (near-symmetry of sigma around trough centers,
witness search for a conjectured decrement pattern in the counts,
upward-closure probes, off-bound structure) report findings; they never
decide correctness by themselves.  Hard guarantees live in the core
modules and their tests.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from fractions import Fraction

from .exactmath import is_perfect_square
from .sigmacore import (
    min_k,
    sigma,
    sigma_k,
    sigma_lower,
    sigma_upper,
    t_set,
    tau,
)

__all__ = [
    "SweepRecord",
    "TauProfile",
    "sweep",
    "tau_profile",
    "on_bound_fraction",
    "symmetry_stats",
    "symmetry_full_range",
    "symmetry_report",
    "off_bound_points",
    "offbound_peaks",
    "offbound_minima",
    "k_set",
    "conjecture1_search",
    "upward_closure_check",
]


@dataclass(frozen=True)
class SweepRecord:
    """One row of a sigma sweep; internally consistent by construction."""

    a: int
    sigma: int
    sigma1: int
    upper: int
    on_bound: bool
    min_k: int
    t_first: int

    def __post_init__(self):
        if not (self.sigma1 <= self.sigma <= self.upper):
            raise ValueError(f"bounds violated at a={self.a}")
        if self.on_bound != (self.sigma == self.sigma1):
            raise ValueError(f"on_bound flag inconsistent at a={self.a}")
        if tau(self.a, self.sigma) != 1:
            raise ValueError(f"sigma witness count is not 1 at a={self.a}")


@dataclass(frozen=True)
class TauProfile:
    """tau(a, s) for s = 1..s_max; steps by at most 1 and enters at 1."""

    a: int
    counts: tuple[int, ...]

    def __post_init__(self):
        prev = 0
        seen_positive = False
        for s, cur in enumerate(self.counts, start=1):
            if abs(cur - prev) > 1:
                raise ValueError(f"tau jump at a={self.a}, s={s}")
            if cur > 0 and not seen_positive:
                if cur != 1:
                    raise ValueError(f"tau enters above 1 at a={self.a}, s={s}")
                seen_positive = True
            prev = cur


def tau_profile(a: int, s_max: int) -> TauProfile:
    if s_max < 1:
        raise ValueError("s_max must be >= 1")
    return TauProfile(a, tuple(tau(a, s) for s in range(1, s_max + 1)))


def _record(a: int) -> SweepRecord:
    s = sigma(a)
    s1 = sigma_lower(a)
    return SweepRecord(
        a=a,
        sigma=s,
        sigma1=s1,
        upper=sigma_upper(a),
        on_bound=s == s1,
        min_k=min_k(a),
        t_first=t_set(a, s)[0],
    )


def sweep(a_from: int, a_to: int, jobs: int | None = None) -> list[SweepRecord]:
    """Records for a_from..a_to inclusive, in order regardless of jobs."""
    if a_from < 1 or a_to < a_from:
        raise ValueError("need 1 <= a_from <= a_to")
    values = range(a_from, a_to + 1)
    if jobs is None or jobs <= 1 or len(values) < 64:
        return [_record(a) for a in values]
    chunk = max(1, len(values) // (jobs * 8))
    with multiprocessing.Pool(jobs) as pool:
        return pool.map(_record, values, chunksize=chunk)


def on_bound_fraction(a_from: int, a_to: int) -> Fraction:
    """Exact share of a in [a_from, a_to] with sigma(a) = sigma_1(a)."""
    if a_from < 1 or a_to < a_from:
        raise ValueError("need 1 <= a_from <= a_to")
    hits = sum(1 for a in range(a_from, a_to + 1) if sigma(a) == sigma_lower(a))
    return Fraction(hits, a_to - a_from + 1)


def _symmetry_counts(n: int, d_max: int) -> tuple[int, int]:
    center = n * (n + 1)
    hits = sum(1 for d in range(1, d_max + 1) if sigma(center - d) == sigma(center + d))
    return hits, d_max


def symmetry_stats(n: int, d_max: int) -> Fraction:
    """Share of offsets 1 <= d <= d_max with sigma symmetric about n(n+1).

    d_max may not exceed n, which keeps both mirrored arguments within the
    trough between n^2 and (n+1)^2.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if not 1 <= d_max <= n:
        raise ValueError("need 1 <= d_max <= n")
    return Fraction(*_symmetry_counts(n, d_max))


def symmetry_full_range(n: int) -> Fraction:
    """Unclipped variant: offsets run to n(n+1) - 1, crossing square spikes."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return Fraction(*_symmetry_counts(n, n * (n + 1) - 1))


def symmetry_report(
    n_min: int = 2,
    n_max: int = 44,
    d_max: int | None = None,
    full_range: bool = False,
) -> dict:
    """Per-trough symmetry ratios plus the aggregate over all compared offsets."""
    if n_min < 2 or n_max < n_min:
        raise ValueError("need 2 <= n_min <= n_max")
    per_n = []
    hits = total = 0
    for n in range(n_min, n_max + 1):
        if full_range:
            dm = n * (n + 1) - 1
        else:
            dm = n if d_max is None else min(d_max, n)
        h, t = _symmetry_counts(n, dm)
        per_n.append(
            {"n": n, "center": n * (n + 1), "matches": h, "comparisons": t}
        )
        hits += h
        total += t
    return {
        "per_n": per_n,
        "aggregate": Fraction(hits, total),
        "matches": hits,
        "comparisons": total,
    }


def off_bound_points(a_from: int, a_to: int) -> list[tuple[int, int]]:
    """(a, sigma(a)) for every a in range with sigma strictly above the bound."""
    if a_from < 1 or a_to < a_from:
        raise ValueError("need 1 <= a_from <= a_to")
    out = []
    for a in range(a_from, a_to + 1):
        s = sigma(a)
        if s > sigma_lower(a):
            out.append((a, s))
    return out


def offbound_peaks(n_from: int, n_to: int) -> list[tuple[int, int, int]]:
    """(n, a_peak, sigma_peak) per square interval; intervals with no
    off-bound point are omitted.  Ties resolve to the smallest a."""
    if n_from < 2 or n_to < n_from:
        raise ValueError("need 2 <= n_from <= n_to")
    peaks = []
    for n in range(n_from, n_to + 1):
        pts = off_bound_points(n * n + 1, (n + 1) ** 2 - 1)
        if pts:
            a_peak, s_peak = max(pts, key=lambda p: (p[1], -p[0]))
            peaks.append((n, a_peak, s_peak))
    return peaks


def offbound_minima(n: int) -> list[int]:
    """Off-bound a strictly between n^2 and (n+1)^2 with sigma(a) = 5."""
    if n < 7:
        raise ValueError("n must be >= 7")
    return [a for a, s in off_bound_points(n * n + 1, (n + 1) ** 2 - 1) if s == 5]


def k_set(n: int, convention: str = "minimal") -> set[int]:
    """Curve indices realized on n^2 < a < (n+1)^2.

    minimal: the least matching k per a.  existential: every k <= sigma(a)
    with sigma_k(a) = sigma(a).  (k > sigma(a) never matches since
    sigma_k >= k+1.)
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if convention not in ("minimal", "existential"):
        raise ValueError(f"unknown convention: {convention!r}")
    ks: set[int] = set()
    for a in range(n * n + 1, (n + 1) ** 2):
        s = sigma(a)
        if convention == "minimal":
            ks.add(min_k(a))
        else:
            for k in range(1, s + 1):
                if sigma_k(a, k) == s:
                    ks.add(k)
    return ks


def conjecture1_search(a: int, k: int, s_max: int) -> int | None:
    """Smallest s <= s_max with tau(a, s) = k and tau(a, s+1) = k-1, else None.

    Only defined away from squares: tau profiles at a = n^2 and n^2 - 1
    are nondecreasing, so no decrement step exists there.
    """
    if is_perfect_square(a) is not None or is_perfect_square(a + 1) is not None:
        raise ValueError("a and a+1 must both be non-squares")
    if k < 1:
        raise ValueError("k must be >= 1")
    if s_max < 1:
        raise ValueError("s_max must be >= 1")
    prev = tau(a, 1)
    for s in range(1, s_max + 1):
        cur = tau(a, s + 1)
        if prev == k and cur == k - 1:
            return s
        prev = cur
    return None


def upward_closure_check(a: int, s_max: int) -> list[int]:
    """All s <= s_max where tau(a, s) > 0 but tau(a, s+1) = 0."""
    if a < 1:
        raise ValueError("a must be >= 1")
    if s_max < 1:
        raise ValueError("s_max must be >= 1")
    return [s for s in range(1, s_max + 1) if tau(a, s) > 0 and tau(a, s + 1) == 0]
