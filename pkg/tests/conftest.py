"""Shared independent oracles for the test suite.

These deliberately re-derive results through different algorithms than the
package uses (augmenting-path matching instead of Hopcroft-Karp, trial
division instead of Miller-Rabin, filter-based enumeration instead of the
pruned generator), so agreement is meaningful.
"""

from __future__ import annotations

import itertools
import math


def kuhn_matching_size(adj, n_left: int, n_right: int) -> int:
    """Maximum bipartite matching size by plain augmenting-path search."""
    match_r = [-1] * n_right

    def try_augment(v, seen):
        for color in adj[v]:
            if color in seen:
                continue
            seen.add(color)
            if match_r[color] == -1 or try_augment(match_r[color], seen):
                match_r[color] = v
                return True
        return False

    size = 0
    for v in range(n_left):
        if try_augment(v, set()):
            size += 1
    return size


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def totient(n: int) -> int:
    count = 0
    for a in range(1, n + 1):
        if math.gcd(a, n) == 1:
            count += 1
    return count


def relabel_by_first_appearance(lists) -> tuple:
    """Rename colors in order of first appearance (vertices in order,
    lists sorted); the result is in restricted-growth order."""
    rename: dict[int, int] = {}
    for lst in lists:
        for color in sorted(lst):
            if color not in rename:
                rename[color] = len(rename)
    return tuple(tuple(sorted(rename[color] for color in lst)) for lst in lists)


def brute_force_canonical(lists) -> tuple:
    """Lexicographic minimum of an assignment's color-permutation orbit,
    found by trying every permutation of the colors in use. Only viable
    for a handful of colors; meant as an independent cross-check."""
    colors = sorted({color for lst in lists for color in lst})
    best = None
    for perm in itertools.permutations(range(len(colors))):
        mapping = dict(zip(colors, perm))
        candidate = tuple(tuple(sorted(mapping[color] for color in lst))
                          for lst in lists)
        if best is None or candidate < best:
            best = candidate
    return best if best is not None else tuple(tuple(lst) for lst in lists)
