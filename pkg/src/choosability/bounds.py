"""Bounds on the separation choosability of complete graphs.

chi(n, c) here is the least list size k such that K_n is colorable from
every assignment of k-color lists whose pairwise intersections have size
at most c. The module computes lower bounds (constructive from the
finite-field instances, a general square-root fallback, and an
asymptotic variant driven by a prime search), the Hall-threshold upper
bound, and the windows of n on which lower and upper bound meet so the
value is known exactly.

Every threshold comparison runs on exact rationals: several window
endpoints (for example n = 15 at c = 1) are tight, and floating point
could misclassify them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .gf import NotPrimePower, factor_prime_power


class DegenerateDenominator(ValueError):
    """A bound formula was evaluated where its denominator is not positive."""


class AdmissibilityViolated(ValueError):
    """(q, c) does not satisfy: q a prime power, c | q-1, c < q-1."""


def is_admissible(q: int, c: int) -> bool:
    """True iff q is a prime power with c dividing q-1 and c < q-1."""
    if c < 1:
        return False
    try:
        factor_prime_power(q)
    except NotPrimePower:
        return False
    return (q - 1) % c == 0 and c < q - 1


def check_admissible(q: int, c: int) -> None:
    if not is_admissible(q, c):
        raise AdmissibilityViolated(
            f"(q={q}, c={c}) needs q a prime power, c | q-1 and c < q-1"
        )


# -- primality and prime powers ---------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n below 3.3 * 10**24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(limit: int) -> list[int]:
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            start = p * p
            sieve[start:limit + 1:p] = bytearray(len(range(start, limit + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def prime_powers_up_to(limit: int) -> list[int]:
    """All q = p^m <= limit with p prime and m >= 1, ascending."""
    out = []
    for p in primes_up_to(limit):
        q = p
        while q <= limit:
            out.append(q)
            q *= p
    out.sort()
    return out


def admissible_prime_powers(c: int, q_max: int) -> list[int]:
    """All prime powers q <= q_max with c | q-1 and c < q-1, ascending."""
    if c < 1:
        raise ValueError(f"separation cap must be positive, got c={c}")
    return [q for q in prime_powers_up_to(q_max)
            if (q - 1) % c == 0 and c < q - 1]


# -- integer roots -----------------------------------------------------------

def icbrt_ceil(n: int) -> int:
    """Smallest t >= 0 with t**3 >= n."""
    if n <= 0:
        return 0
    t = round(n ** (1 / 3))
    while t ** 3 < n:
        t += 1
    while t > 0 and (t - 1) ** 3 >= n:
        t -= 1
    return t


def _ceil_sqrt_half(x: int) -> int:
    """Smallest t >= 0 with 2 * t**2 >= x, i.e. ceil(sqrt(x / 2)) exactly."""
    if x <= 0:
        return 0
    t = math.isqrt(x // 2)
    while 2 * t * t < x:
        t += 1
    return t


# -- bound formulas -----------------------------------------------------------

def johnson_bound(m: int, k: int, c: int) -> Fraction:
    """Johnson's set-union bound: m sets of size >= k with pairwise
    intersections <= c cover at least m*k^2 / (m*c + k - c) points."""
    if m < 1 or k < 1:
        raise ValueError(f"need m >= 1 and k >= 1, got m={m}, k={k}")
    den = m * c + k - c
    if den <= 0:
        raise DegenerateDenominator(f"m*c + k - c = {den} must be positive")
    return Fraction(m * k * k, den)


def vertex_count_bound(q: int, c: int) -> Fraction:
    """Minimum vertex count of a q-uniform hypergraph with q+2 edges whose
    pairwise intersections have size at most c-1.

    Evaluates (q^2 + q*(c+3)/(c+1) - 2*(c-1)/(c+1)) / c as an exact
    rational; for c = 1 this is q^2 + 2q (disjoint edges, tight).
    """
    if q < 1 or c < 1:
        raise ValueError(f"need q >= 1 and c >= 1, got q={q}, c={c}")
    return Fraction(q * q * (c + 1) + (c + 3) * q - 2 * (c - 1), c * (c + 1))


def johnson_threshold(q: int, c: int) -> Fraction:
    """Alternative threshold q^2*(q+2) / (c*(q+1) - 1) obtained from
    Johnson's bound; never exceeds vertex_count_bound."""
    if q < 1 or c < 1:
        raise ValueError(f"need q >= 1 and c >= 1, got q={q}, c={c}")
    den = c * (q + 1) - 1
    if den <= 0:
        raise DegenerateDenominator(f"c*(q+1) - 1 = {den} must be positive")
    return Fraction(q * q * (q + 2), den)


# -- derived bounds on chi ----------------------------------------------------

def _hall_q(n: int, c: int) -> int:
    """Smallest positive integer q with n <= vertex_count_bound(q, c)."""
    # integer form of n <= (q^2*(c+1) + (c+3)q - 2(c-1)) / (c*(c+1))
    target = n * c * (c + 1)
    q = 1
    while q * q * (c + 1) + (c + 3) * q - 2 * (c - 1) < target:
        q += 1
    return q


def upper_bound(n: int, c: int) -> int:
    """Least k known to color every (k,c)-assignment on K_n.

    min(n, q*+1) where q* is the smallest integer whose Hall threshold
    reaches n; lists of size n always admit a saturating matching.
    """
    if n < 1 or c < 1:
        raise ValueError(f"need n >= 1 and c >= 1, got n={n}, c={c}")
    return min(n, _hall_q(n, c) + 1)


def lower_bound_constructive(n: int, c: int) -> tuple[int, str]:
    """Best available lower bound from hard instances, as (value, provenance).

    Takes q+1 for the largest admissible prime power q whose hard instance
    fits inside K_n (needs (q^2-1)/c + 2 <= n), and falls back to the
    general bound ceil(sqrt(c*n/2)) when that is larger or no q fits.
    Provenance is "constructive" or "ktv" accordingly.
    """
    if n < 1 or c < 1:
        raise ValueError(f"need n >= 1 and c >= 1, got n={n}, c={c}")
    best = 0
    if n >= 2:
        q_cap = math.isqrt(c * (n - 2) + 1)
        for q in admissible_prime_powers(c, q_cap):
            best = q + 1
    fallback = max(1, _ceil_sqrt_half(c * n))
    if best >= fallback:
        return best, "constructive"
    return fallback, "ktv"


def lower_bound_asymptotic(n: int, c: int) -> int:
    """floor(sqrt(c*(n-2)+1) + 1) - ceil(n^(1/3)), floored at 1.

    Sound only for n large enough that the prime search of
    find_admissible_prime succeeds; callers should gate on that.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    return max(1, math.isqrt(c * (n - 2) + 1) + 1 - icbrt_ceil(n))


def find_admissible_prime(n: int, c: int) -> int | None:
    """Largest prime q with c | q-1 in the search window just below
    sqrt(c*(n-2)+1) + 1, or None when the window contains no such prime.

    The window has width about n^(1/3); absence is an expected outcome at
    small n, not an error.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    hi = math.isqrt(c * (n - 2) + 1) + 1
    lo = max(2, hi - icbrt_ceil(n))
    for q in range(hi, lo - 1, -1):
        if (q - 1) % c == 0 and is_prime(q):
            return q
    return None


@dataclass(frozen=True)
class ExactWindow:
    """Closed interval of n on which chi(n, c) equals `value` exactly."""

    n_lo: int
    n_hi: int
    value: int


def exact_window(q: int, c: int) -> ExactWindow:
    """The interval of n where the (q, c) hard instance meets the Hall
    threshold, pinning chi(n, c) = q + 1."""
    check_admissible(q, c)
    n_lo = (q * q - 1) // c + 2
    n_hi = math.floor(vertex_count_bound(q, c))
    return ExactWindow(n_lo=n_lo, n_hi=n_hi, value=q + 1)


def ktv_reference_bounds(n: int, c: int) -> tuple[float, float]:
    """General-purpose reference interval (sqrt(c*n/2), sqrt(2*e*c*n)).

    Display-only floats; never used in exact threshold logic.
    """
    if n < 1 or c < 1:
        raise ValueError(f"need n >= 1 and c >= 1, got n={n}, c={c}")
    return math.sqrt(c * n / 2), math.sqrt(2 * math.e * c * n)


@dataclass(frozen=True)
class BoundsReport:
    """Consolidated lower/upper/exact values for one (n, c)."""

    n: int
    c: int
    lower: int
    lower_provenance: str  # "constructive" | "ktv" | "asymptotic"
    upper: int
    upper_provenance: str  # "hall-threshold" | "trivial-n"
    exact: int | None


def bounds_report(n: int, c: int) -> BoundsReport:
    """Best lower and upper bounds for (n, c), with exact value when they meet.

    The asymptotic lower bound participates only when its underlying prime
    search actually succeeds for this n. The lower bound is clamped at n,
    since n colors always suffice on K_n.
    """
    if n < 1 or c < 1:
        raise ValueError(f"need n >= 1 and c >= 1, got n={n}, c={c}")
    lower, tag = lower_bound_constructive(n, c)
    if n >= 2 and find_admissible_prime(n, c) is not None:
        asymptotic = lower_bound_asymptotic(n, c)
        if asymptotic > lower:
            lower, tag = asymptotic, "asymptotic"
    if lower > n:
        lower = n
    hall_q = _hall_q(n, c)
    if n < hall_q + 1:
        upper, upper_tag = n, "trivial-n"
    else:
        upper, upper_tag = hall_q + 1, "hall-threshold"
    exact = lower if lower == upper else None
    return BoundsReport(n=n, c=c, lower=lower, lower_provenance=tag,
                        upper=upper, upper_provenance=upper_tag, exact=exact)
