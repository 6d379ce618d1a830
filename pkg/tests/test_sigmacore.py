"""Square-locating core: counts, witnesses, bounds and zero windows."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sqdenom.exactmath import Surd, cmp_int_vs_sum_sqrt, floor_surd, surd_cmp
from sqdenom.sigmacore import (
    Decomposition,
    decompose,
    min_k,
    on_bound_criterion,
    sigma,
    sigma_k,
    sigma_l,
    sigma_lower,
    sigma_r,
    sigma_scan,
    sigma_upper,
    t_set,
    tau,
    tau_brute,
    zero_windows,
)


def test_decompose_examples():
    assert decompose(8) == Decomposition(8, 2, 4, 3, 1)
    assert decompose(19) == Decomposition(19, 4, 3, 5, 6)
    assert decompose(9) == Decomposition(9, 3, 0, 4, 7)
    assert decompose(1) == Decomposition(1, 1, 0, 2, 3)
    assert decompose(0) == Decomposition(0, 0, 0, 1, 1)
    with pytest.raises(ValueError):
        decompose(-1)


def test_decompose_frame_identities():
    for a in range(0, 500):
        dc = decompose(a)
        assert dc.a == dc.n * dc.n + dc.b == dc.m * dc.m - dc.c
        assert dc.m == dc.n + 1
        assert 0 <= dc.b <= 2 * dc.n
        assert 1 <= dc.c <= 2 * dc.m - 1


def test_tau_examples():
    assert tau(3, 10) == 2
    assert tau(8, 6) == 1
    assert [tau(8, s) for s in range(2, 6)] == [0, 0, 0, 0]
    assert tau(2, 10) == 3
    # upper endpoint is itself a square and must not be counted
    assert tau(3, 2) == 0
    assert tau(8, 3) == 0
    assert tau(0, 1) == 0
    assert tau(0, 4) == 3
    # no integer lies strictly between consecutive integers
    assert all(tau(a, 1) == 0 for a in range(0, 200))


def test_tau_validation():
    with pytest.raises(ValueError):
        tau(-1, 2)
    with pytest.raises(ValueError):
        tau(5, 0)
    with pytest.raises(ValueError):
        tau_brute(-1, 2)
    with pytest.raises(ValueError):
        t_set(5, 0)


def test_tau_matches_brute_force():
    for a in range(0, 61):
        for s in range(1, 41):
            assert tau(a, s) == tau_brute(a, s), (a, s)


@settings(max_examples=300)
@given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=1, max_value=50))
def test_tau_matches_brute_force_large(a, s):
    assert tau(a, s) == tau_brute(a, s)


def test_t_set_examples():
    assert t_set(2, 10) == [15, 16, 17]
    assert t_set(8, 6) == [17]
    assert t_set(19, 5) == [22]
    assert t_set(991, 27) == [850]
    assert t_set(3, 2) == []
    assert t_set(0, 2) == [1]


def test_t_set_witnesses_are_exact():
    for a in range(0, 40):
        for s in range(1, 30):
            ts = t_set(a, s)
            assert len(ts) == tau(a, s)
            assert ts == sorted(ts)
            for t in ts:
                assert s * s * a < t * t < s * s * (a + 1)


def test_interval_midpoint_family():
    # a = n^2 + n always admits (2n+1)/2 and nothing else at denominator 2
    for n in range(1, 60):
        assert t_set(n * n + n, 2) == [2 * n + 1]
        assert sigma(n * n + n) == 2


def test_sigma_examples():
    assert sigma(0) == 2
    assert sigma(1) == 3
    assert sigma(2) == 2
    assert sigma(3) == 4
    assert sigma(8) == 6
    assert sigma(19) == 5
    assert sigma(991) == 27


def test_sigma_strategies_agree():
    for a in range(0, 301):
        assert sigma(a, "scan") == sigma(a, "cf"), a
    with pytest.raises(ValueError):
        sigma(8, "guess")
    with pytest.raises(ValueError):
        sigma(-1)
    with pytest.raises(ValueError):
        sigma(-1, "cf")


def test_sigma_scan_start_override():
    for a in range(0, 201):
        assert sigma_scan(a, start=2) == sigma(a)


def test_sigma_bound_surds():
    assert sigma_l(8) == Surd(1)
    assert sigma_r(8) == Surd(3, 2, 2)
    assert sigma_l(19) == Surd(2, 1, 5, 2)
    assert sigma_r(19) == Surd(5, 1, 19, 6)


def test_sigma_k_examples():
    assert sigma_k(8, 1) == 6
    assert sigma_k(19, 1) == 3
    assert sigma_k(19, 2) == 5
    assert sigma_k(0, 1) == 2
    with pytest.raises(ValueError):
        sigma_k(8, 0)


def test_sigma_k_floor_matches_surd_floor():
    # the pure-integer formula equals floor(max(k*sigma_l, k*sigma_r)) + 1
    for a in range(0, 200):
        left, right = sigma_l(a), sigma_r(a)
        for k in range(1, 6):
            kl = Surd(k * left.p, k * left.q, left.d, left.r)
            kr = Surd(k * right.p, k * right.q, right.d, right.r)
            top = kl if surd_cmp(kl, kr) >= 0 else kr
            assert sigma_k(a, k) == floor_surd(top) + 1, (a, k)


def test_sigma_k_exceeds_index():
    for a in range(0, 120):
        for k in range(1, 11):
            assert sigma_k(a, k) >= k + 1


def test_sigma_bounds_chain():
    for a in range(0, 601):
        assert sigma_lower(a) <= sigma(a) <= sigma_upper(a), a
    with pytest.raises(ValueError):
        sigma_upper(-1)


def test_sigma_is_first_hit_with_one_witness():
    for a in range(0, 301):
        s = sigma(a)
        assert s >= 2
        assert tau(a, s) == 1
        for below in range(1, s):
            assert tau(a, below) == 0


def test_on_bound_criterion_examples():
    assert on_bound_criterion(8) is True
    assert on_bound_criterion(12) is True
    assert on_bound_criterion(2) is True
    assert on_bound_criterion(19) is False
    assert on_bound_criterion(54) is False
    with pytest.raises(ValueError):
        on_bound_criterion(1)


def test_on_bound_criterion_equals_bound_attainment():
    for a in range(2, 801):
        assert on_bound_criterion(a) == (sigma(a) == sigma_lower(a)), a


def test_min_k_examples():
    assert min_k(8) == 1
    assert min_k(19) == 2
    assert min_k(991) == 13
    assert min_k(0) == 1


def test_min_k_is_minimal():
    for a in range(0, 201):
        k = min_k(a)
        s = sigma(a)
        assert sigma_k(a, k) == s
        for smaller in range(1, k):
            assert sigma_k(a, smaller) != s


def test_zero_windows_structure():
    with pytest.raises(ValueError):
        zero_windows(8, -1)
    ws = zero_windows(8, 4)
    by_key = {(w.side, w.k): w for w in ws}
    w = by_key[("left-crowding", 0)]
    assert surd_cmp(w.lo, Surd(0)) == 0 and surd_cmp(w.hi, Surd(1)) == 0
    w = by_key[("right-crowding", 0)]
    assert w.hi == Surd(3, 2, 2)
    w = by_key[("left-crowding", 1)]
    assert w.lo == Surd(1, 1, 2, 2) and surd_cmp(w.hi, Surd(2)) == 0
    # a + 1 = 9 is a square, so shifted right windows are all empty
    assert not any(w.side == "right-crowding" and w.k >= 1 for w in ws)
    # s = 5 sits exactly on the closed upper edge of the k = 4 left window
    w = by_key[("left-crowding", 4)]
    assert w.lo == Surd(2, 2, 2)
    assert surd_cmp(w.hi, Surd(5)) == 0
    assert tau(8, 5) == 0


def test_zero_windows_square_lower_interval():
    # a = 9 has b = 0: shifted left windows are empty, the base one survives
    ws = zero_windows(9, 3)
    assert not any(w.side == "left-crowding" and w.k >= 1 for w in ws)
    base = next(w for w in ws if w.side == "left-crowding" and w.k == 0)
    assert base.hi == Surd(3, 1, 10)


def _covered_denominators(a, k_max, s_max):
    out = set()
    for w in zero_windows(a, k_max):
        lo_floor = floor_surd(w.lo)
        lo = lo_floor if surd_cmp(w.lo, Surd(lo_floor)) == 0 else lo_floor + 1
        hi = floor_surd(w.hi)
        out.update(range(max(1, lo), min(s_max, hi) + 1))
    return out


def test_zero_windows_cover_exactly_the_zero_counts():
    for a in range(0, 101):
        covered = _covered_denominators(a, 200, 200)
        for s in range(1, 201):
            assert (s in covered) == (tau(a, s) == 0), (a, s)


def test_large_margin_forces_witnesses():
    # s above k*(sqrt(a) + sqrt(a+1)) makes the target window longer than k
    for a in range(1, 101):
        for k in range(1, 6):
            for s in range(2, 121):
                if cmp_int_vs_sum_sqrt(s, k, a) == 1:
                    assert tau(a, s) >= k, (a, k, s)
