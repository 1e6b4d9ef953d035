"""List assignments on complete graphs over a global integer color universe."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ListAssignment:
    """Per-vertex color lists for K_n, colors drawn from [0, num_colors).

    `lists[v]` is a strictly increasing tuple of color ids. `k` is the
    intended list size and `c` the intended pairwise-intersection cap;
    whether the lists actually satisfy them is checked by
    solver.validate_assignment, not by this container.

    `meta` optionally carries construction provenance (field parameters
    and the like) and is passed through to serialized instance files.
    """

    n: int
    k: int
    c: int
    num_colors: int
    lists: tuple[tuple[int, ...], ...]
    meta: dict | None = None


def assignment_from_lists(lists, c: int, num_colors: int | None = None,
                          k: int | None = None, meta: dict | None = None) -> ListAssignment:
    """Build a ListAssignment from an iterable of color iterables.

    Lists are deduplicated and sorted. When omitted, k is taken from the
    first list and num_colors from the largest color id present.
    """
    norm = tuple(tuple(sorted(set(lst))) for lst in lists)
    if k is None:
        k = len(norm[0]) if norm else 0
    if num_colors is None:
        num_colors = 1 + max((lst[-1] for lst in norm if lst), default=-1)
    return ListAssignment(n=len(norm), k=k, c=c, num_colors=num_colors,
                          lists=norm, meta=meta)
