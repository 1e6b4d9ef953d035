"""Ground-truth brute force at desk scale.

The adversary space for the list-size question is enumerated in a
canonical form that kills color-relabeling symmetry exactly: an
assignment is canonical when it is the lexicographically smallest member
of its orbit under color permutations, which works out to sorting the
per-color vertex sets by their characteristic vectors. Canonical
assignments are in particular in restricted-growth order (reading the
vertices in order, each list sorted, a color id appears only after every
smaller id has appeared), and every (k,c)-assignment is equivalent to
exactly one canonical assignment, so exhausting the canonical space
decides whether a given k always admits a proper coloring.

Searches refuse instead of truncating: a partial search must never report
an exact value.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import solver
from .instances import ListAssignment, assignment_from_lists


class SearchTooLarge(ValueError):
    """The requested exhaustive search exceeds the configured cap."""


DEFAULT_SEARCH_CAP = 14  # refuse enumerations with n * k above this

Assignment = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SmallGraph:
    """Simple undirected graph on vertices 0..n-1, edges as sorted pairs."""

    n: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, n: int, edge_iter) -> "SmallGraph":
        norm = set()
        for u, v in edge_iter:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"bad edge ({u}, {v}) for {n} vertices")
            norm.add((min(u, v), max(u, v)))
        return cls(n, tuple(sorted(norm)))


def complete_graph(n: int) -> SmallGraph:
    return SmallGraph.of(n, itertools.combinations(range(n), 2))


def canonical_form(lists) -> Assignment:
    """The lexicographically smallest color relabeling of an assignment.

    Relabeling colors permutes the per-color vertex sets ("columns");
    the tuple of sorted lists is minimized exactly when the columns are
    numbered in ascending characteristic-vector order (at the first vertex
    where two columns differ, the one containing it comes first). An
    adjacent swap violating that order strictly lowers the first affected
    list, so the sorted order is the unique minimum.
    """
    n = len(lists)
    columns: dict[int, list[int]] = {}
    for v, lst in enumerate(lists):
        for color in lst:
            columns.setdefault(color, []).append(v)

    def column_key(vertices: list[int]) -> tuple[int, ...]:
        bits = [1] * n
        for v in vertices:
            bits[v] = 0
        return tuple(bits)

    order = sorted(columns.values(), key=column_key)
    relabeled: list[list[int]] = [[] for _ in range(n)]
    for new_id, vertices in enumerate(order):
        for v in vertices:
            relabeled[v].append(new_id)
    return tuple(tuple(lst) for lst in relabeled)


def iter_canonical_assignments(n: int, k: int, c: int, *, edges=None,
                               cap: int = DEFAULT_SEARCH_CAP):
    """Yield every canonical (k,c)-assignment on n vertices exactly once.

    `edges` restricts the pairwise intersection cap to adjacent pairs;
    None means the complete graph. Partial assignments violating the
    intersection cap or restricted growth are pruned; full assignments
    that are not their orbit's representative are dropped. Raises
    SearchTooLarge when n * k exceeds `cap` (the search is refused
    outright, never truncated).
    """
    if n < 0 or k < 0 or c < 0:
        raise ValueError(f"need n, k, c >= 0, got ({n}, {k}, {c})")
    if n * k > cap:
        raise SearchTooLarge(
            f"refusing exhaustive search: n * k = {n * k} exceeds cap {cap}"
        )
    prev_adj: list[list[int]] = [[] for _ in range(n)]
    if edges is None:
        for v in range(n):
            prev_adj[v] = list(range(v))
    else:
        for u, v in edges:
            u, v = min(u, v), max(u, v)
            prev_adj[v].append(u)
    return _generate(n, k, c, prev_adj)


def _generate(n, k, c, prev_adj):
    # generate restricted-growth candidates in lexicographic order, then
    # keep only true orbit representatives; canonical forms are always in
    # restricted-growth order, so nothing is missed
    lists: list[tuple[int, ...]] = []
    masks: list[int] = []

    def extend(v: int, next_fresh: int):
        if v == n:
            snapshot = tuple(lists)
            if canonical_form(snapshot) == snapshot:
                yield snapshot
            return
        for combo in itertools.combinations(range(next_fresh + k), k):
            fresh = 0
            for color in combo:
                if color >= next_fresh:
                    fresh += 1
            # fresh colors must be the next ids in order, nothing skipped
            if fresh and combo[-fresh:] != tuple(range(next_fresh, next_fresh + fresh)):
                continue
            mask = 0
            for color in combo:
                mask |= 1 << color
            if any((mask & masks[u]).bit_count() > c for u in prev_adj[v]):
                continue
            lists.append(combo)
            masks.append(mask)
            yield from extend(v + 1, next_fresh + fresh)
            lists.pop()
            masks.pop()

    yield from extend(0, 0)


def enumerate_canonical_assignments(n: int, k: int, c: int, visitor, *,
                                    edges=None, cap: int = DEFAULT_SEARCH_CAP) -> int:
    """Call `visitor` on each canonical assignment; returns the visit count."""
    count = 0
    for assignment in iter_canonical_assignments(n, k, c, edges=edges, cap=cap):
        visitor(assignment)
        count += 1
    return count


@dataclass(frozen=True)
class ChiSearchResult:
    """Outcome of an exact list-size search.

    `defeated_by` is the first canonical assignment that defeats list size
    chi_l - 1 (None when chi_l == 1); `assignments_checked` counts every
    assignment examined across all candidate k.
    """

    n: int
    c: int
    chi_l: int
    defeated_by: Assignment | None
    assignments_checked: int


def _chi_search(n: int, c: int, edges, admits_coloring, cap: int) -> ChiSearchResult:
    if n < 1 or c < 0:
        raise ValueError(f"need n >= 1 and c >= 0, got n={n}, c={c}")
    checked = 0
    defeated = None
    for k in range(1, n + 1):
        bad = None
        for assignment in iter_canonical_assignments(n, k, c, edges=edges, cap=cap):
            checked += 1
            if not admits_coloring(assignment):
                bad = assignment
                break
        if bad is None:
            return ChiSearchResult(n=n, c=c, chi_l=k, defeated_by=defeated,
                                   assignments_checked=checked)
        defeated = bad
    raise AssertionError("list size n always suffices on n vertices")


def chi_l_complete_search(n: int, c: int, *, cap: int = DEFAULT_SEARCH_CAP) -> ChiSearchResult:
    """Exact least k such that every canonical (k,c)-assignment on K_n is
    colorable, decided by the matching solver, with search statistics."""

    def admits(assignment: Assignment) -> bool:
        return solver.colorable(assignment_from_lists(assignment, c)).colorable

    return _chi_search(n, c, None, admits, cap)


def exact_chi_l_complete(n: int, c: int, *, cap: int = DEFAULT_SEARCH_CAP) -> int:
    return chi_l_complete_search(n, c, cap=cap).chi_l


def list_colorable_graph(graph: SmallGraph, assignment: ListAssignment) -> bool:
    """Proper list-colorability of an arbitrary tiny graph by backtracking.

    Vertices are tried in decreasing degree order; only adjacent vertices
    must receive distinct colors. Limited to n <= 8.
    """
    if graph.n > 8:
        raise SearchTooLarge(f"backtracking limited to 8 vertices, got {graph.n}")
    adj: list[set[int]] = [set() for _ in range(graph.n)]
    for u, v in graph.edges:
        adj[u].add(v)
        adj[v].add(u)
    order = sorted(range(graph.n), key=lambda v: (-len(adj[v]), v))
    chosen: dict[int, int] = {}

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for color in assignment.lists[v]:
            if all(chosen.get(u) != color for u in adj[v]):
                chosen[v] = color
                if extend(i + 1):
                    return True
                del chosen[v]
        return False

    return extend(0)


def chi_l_graph_search(graph: SmallGraph, c: int, *, cap: int = DEFAULT_SEARCH_CAP) -> ChiSearchResult:
    """Exact least k such that every canonical (k,c)-assignment on the
    graph (cap applying to adjacent pairs only) is colorable."""

    def admits(assignment: Assignment) -> bool:
        return list_colorable_graph(graph, assignment_from_lists(assignment, c))

    return _chi_search(graph.n, c, graph.edges, admits, cap)


def exact_chi_l_graph(graph: SmallGraph, c: int, *, cap: int = DEFAULT_SEARCH_CAP) -> int:
    return chi_l_graph_search(graph, c, cap=cap).chi_l


@dataclass(frozen=True)
class ProbeReport:
    """Result of the exhaustive no-graph-beats-the-complete-graph probe."""

    n_max: int
    c: int
    complete_values: dict
    counterexample: tuple[SmallGraph, Assignment] | None
    graphs_checked: int
    assignments_checked: int


def conjecture_probe(n_max: int, c: int, k_cap: int | None = None, *,
                     cap: int = DEFAULT_SEARCH_CAP) -> ProbeReport:
    """Check, for every labeled graph G on up to n_max vertices, that G is
    colorable from every (k,c)-assignment with k the exact value for K_n.

    A counterexample would be a graph needing larger lists than the
    complete graph on the same vertices; the report carries the witnessing
    assignment. Labeled-graph enumeration caps n_max at 5.
    """
    if n_max < 1:
        raise ValueError(f"need n_max >= 1, got {n_max}")
    if n_max > 5:
        raise SearchTooLarge(f"probe enumerates all labeled graphs; n_max <= 5, got {n_max}")
    complete_values: dict[int, int] = {}
    graphs_checked = 0
    assignments_checked = 0
    for n in range(1, n_max + 1):
        k0 = exact_chi_l_complete(n, c, cap=cap)
        if k_cap is not None and k0 > k_cap:
            raise SearchTooLarge(f"list size {k0} for K_{n} exceeds k_cap {k_cap}")
        complete_values[n] = k0
        all_pairs = list(itertools.combinations(range(n), 2))
        for bits in range(1 << len(all_pairs)):
            edges = tuple(pair for i, pair in enumerate(all_pairs) if bits >> i & 1)
            graph = SmallGraph(n, edges)
            graphs_checked += 1
            for assignment in iter_canonical_assignments(n, k0, c, edges=edges, cap=cap):
                assignments_checked += 1
                if not list_colorable_graph(graph, assignment_from_lists(assignment, c)):
                    return ProbeReport(n_max=n_max, c=c, complete_values=complete_values,
                                       counterexample=(graph, assignment),
                                       graphs_checked=graphs_checked,
                                       assignments_checked=assignments_checked)
    return ProbeReport(n_max=n_max, c=c, complete_values=complete_values,
                       counterexample=None, graphs_checked=graphs_checked,
                       assignments_checked=assignments_checked)
