"""Bound formulas, thresholds, windows, and the consolidated report."""

from fractions import Fraction

import pytest

from choosability.bounds import (
    AdmissibilityViolated,
    DegenerateDenominator,
    admissible_prime_powers,
    bounds_report,
    exact_window,
    find_admissible_prime,
    icbrt_ceil,
    is_admissible,
    is_prime,
    johnson_bound,
    johnson_threshold,
    ktv_reference_bounds,
    lower_bound_asymptotic,
    lower_bound_constructive,
    prime_powers_up_to,
    upper_bound,
    vertex_count_bound,
)
from conftest import trial_division_is_prime


# -- primality and prime powers ------------------------------------------------

def test_is_prime_matches_trial_division():
    for n in range(0, 2000):
        assert is_prime(n) == trial_division_is_prime(n), n


def test_is_prime_rejects_strong_pseudoprimes():
    # composite numbers that fool small Miller-Rabin base sets
    assert not is_prime(3215031751)            # = 151 * 751 * 28351
    assert not is_prime(3825123056546413051)   # pseudoprime to bases 2..23
    assert is_prime(2 ** 61 - 1)


def test_prime_powers_up_to():
    assert prime_powers_up_to(16) == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


def test_admissible_prime_powers_examples():
    assert admissible_prime_powers(2, 10) == [5, 7, 9]
    assert admissible_prime_powers(1, 5) == [3, 4, 5]
    assert admissible_prime_powers(6, 7) == []  # q=7 fails c < q-1


def test_is_admissible():
    assert is_admissible(5, 2)
    assert not is_admissible(4, 3)    # c = q - 1
    assert not is_admissible(7, 4)    # 4 does not divide 6
    assert not is_admissible(6, 1)    # not a prime power


def test_icbrt_ceil():
    for n in range(0, 3000):
        t = icbrt_ceil(n)
        assert t ** 3 >= n
        assert t == 0 or (t - 1) ** 3 < n
    assert icbrt_ceil(10 ** 18) == 10 ** 6


# -- formulas -----------------------------------------------------------------

def test_johnson_bound_examples():
    assert johnson_bound(1, 7, 3) == 7          # single set
    assert johnson_bound(3, 3, 1) == Fraction(27, 5)
    assert johnson_bound(12, 5, 2) == Fraction(300, 27)


def test_johnson_bound_degenerate_denominator():
    with pytest.raises(DegenerateDenominator):
        johnson_bound(2, 1, -5)
    with pytest.raises(ValueError):
        johnson_bound(0, 3, 1)


def test_vertex_count_bound_examples():
    assert vertex_count_bound(3, 1) == 15       # 9 + 6
    assert vertex_count_bound(5, 2) == Fraction(49, 3)
    for q in range(1, 30):
        assert vertex_count_bound(q, 1) == q * q + 2 * q


def test_johnson_threshold_examples():
    assert johnson_threshold(3, 1) == 15
    assert johnson_threshold(5, 2) == Fraction(175, 11)
    assert johnson_threshold(1, 1) == 3


def test_johnson_threshold_is_weaker_when_q_at_least_c_minus_1():
    # the "slightly weaker" relation holds exactly on q >= c-1, which
    # contains every admissible pair (those need q >= c+2)
    for q in range(1, 101):
        for c in range(1, 101):
            if q >= c - 1:
                assert johnson_threshold(q, c) <= vertex_count_bound(q, c)


def test_johnson_threshold_can_exceed_vertex_count_bound_for_tiny_q():
    # both are valid lower bounds on the vertex count; neither dominates
    # globally. Smallest crossover: q=1, c=3.
    assert johnson_threshold(1, 3) == Fraction(3, 5)
    assert vertex_count_bound(1, 3) == Fraction(1, 2)
    assert johnson_threshold(1, 3) > vertex_count_bound(1, 3)


def test_johnson_bound_consistent_with_constructions():
    # the uniform hypergraph realizes m = (q^2-1)/c lists of size q with
    # pairwise intersections <= c on (q^2-1)/c vertices, so its vertex
    # count can never undercut Johnson's bound
    import math

    from choosability.construction import furedi_hypergraph

    for q, c in [(3, 1), (5, 2), (7, 3), (9, 4), (16, 5), (8, 1)]:
        hypergraph = furedi_hypergraph(q, c)
        m = hypergraph.n_vertices
        assert m >= math.ceil(johnson_bound(m, q, c))


# -- chi bounds ------------------------------------------------------------------

def test_upper_bound_examples():
    assert upper_bound(14, 2) == 6   # q* = 5 since 14 <= 49/3 and 11 < 14
    assert upper_bound(15, 1) == 4   # exactly at the threshold 15 <= 15
    assert upper_bound(16, 1) == 5
    assert upper_bound(1, 1) == 1
    assert upper_bound(1, 7) == 1


def test_lower_bound_constructive_examples():
    assert lower_bound_constructive(14, 2) == (6, "constructive")
    assert lower_bound_constructive(10, 1) == (4, "constructive")
    # q = 5 needs n >= 14 and no smaller prime power is admissible at c=2,
    # so the sqrt fallback ceil(sqrt(13)) = 4 wins
    assert lower_bound_constructive(13, 2) == (4, "ktv")


def test_lower_bound_asymptotic_examples():
    assert lower_bound_asymptotic(10 ** 6, 2) == 1315
    assert lower_bound_asymptotic(10, 1) == 1
    assert lower_bound_asymptotic(2, 1) == 1


def test_find_admissible_prime():
    found = find_admissible_prime(10 ** 6, 2)
    assert found == 1409
    assert trial_division_is_prime(found) and (found - 1) % 2 == 0
    assert 1315 <= found <= 1415
    assert find_admissible_prime(10, 5) is None
    for n in (100, 500, 1000, 5000):
        assert find_admissible_prime(n, 1) is not None


def test_exact_window_examples():
    window = exact_window(5, 2)
    assert (window.n_lo, window.n_hi, window.value) == (14, 16, 6)
    window = exact_window(3, 1)
    assert (window.n_lo, window.n_hi, window.value) == (10, 15, 4)
    with pytest.raises(AdmissibilityViolated):
        exact_window(4, 3)


def test_windows_nonempty_up_to_256():
    for q in prime_powers_up_to(256):
        for c in range(1, q - 1):
            if (q - 1) % c == 0:
                window = exact_window(q, c)
                assert window.n_lo <= window.n_hi, (q, c)


def test_window_values_consistent_up_to_31():
    for q in prime_powers_up_to(31):
        for c in range(1, q - 1):
            if (q - 1) % c != 0:
                continue
            window = exact_window(q, c)
            for n in range(window.n_lo, window.n_hi + 1):
                report = bounds_report(n, c)
                assert report.exact == q + 1, (q, c, n, report)


def test_windows_never_conflict():
    for c in range(1, 7):
        assigned: dict[int, int] = {}
        for q in prime_powers_up_to(31):
            if not is_admissible(q, c):
                continue
            window = exact_window(q, c)
            for n in range(window.n_lo, window.n_hi + 1):
                assert assigned.setdefault(n, window.value) == window.value


def test_ktv_reference_bounds():
    lo, hi = ktv_reference_bounds(2, 1)
    assert lo == pytest.approx(1.0)
    assert hi == pytest.approx(3.2974425, abs=1e-4)
    lo, hi = ktv_reference_bounds(14, 2)
    assert lo == pytest.approx(3.7416574, abs=1e-4)
    assert hi == pytest.approx(12.337805, abs=1e-3)
    assert lo < 6 < hi  # brackets the true value
    lo, hi = ktv_reference_bounds(1, 3)
    assert lo == pytest.approx((3 / 2) ** 0.5)


def test_bounds_report_examples():
    report = bounds_report(14, 2)
    assert (report.lower, report.upper, report.exact) == (6, 6, 6)
    report = bounds_report(13, 2)
    assert (report.lower, report.upper, report.exact) == (4, 6, None)
    report = bounds_report(1, 1)
    assert (report.lower, report.upper, report.exact) == (1, 1, 1)


def test_bounds_report_clamps_lower_at_n():
    # the sqrt fallback alone would exceed chi here (c > 2n)
    report = bounds_report(2, 5)
    assert report.lower == report.upper == report.exact == 2


def test_sandwich_small_sweep():
    for c in range(1, 4):
        for n in range(1, 301):
            report = bounds_report(n, c)
            assert 1 <= report.lower <= report.upper <= n or n == 0, (n, c, report)
