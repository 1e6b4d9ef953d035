"""List-colorability of complete graphs via bipartite matching.

K_n is colorable from lists L exactly when the bipartite vertex-color
adjacency graph (vertex v adjacent to every color in L(v)) has a matching
saturating all n vertices, because on a complete graph every vertex needs
its own color. The decision procedure therefore runs a maximum matching
and, on failure, extracts a Hall violator: a vertex set S whose combined
lists contain fewer than |S| colors.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .instances import ListAssignment


class ColorOutOfRange(ValueError):
    """A list references a color id outside [0, num_colors)."""


@dataclass(frozen=True)
class VertexColorGraph:
    """Bipartite incidence of K_n vertices (left) and colors (right)."""

    n_left: int
    n_right: int
    adj: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ColorabilityResult:
    """Either a proper coloring or a Hall-violator certificate.

    Exactly one of `coloring` and `violator` is set. The violator is a
    pair (S, N) of sorted vertex and color tuples with N the full
    neighborhood of S and |N| < |S|.
    """

    coloring: tuple[int, ...] | None = None
    violator: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    @property
    def colorable(self) -> bool:
        return self.coloring is not None


@dataclass(frozen=True)
class ValidityReport:
    """Outcome of a (k,c)-validity check, with the first witness on failure."""

    valid: bool
    bad_vertex: int | None = None
    bad_pair: tuple[int, int] | None = None
    overlap: int | None = None


def build_adjacency(assignment: ListAssignment) -> VertexColorGraph:
    """Incidence structure of the vertex-color adjacency graph."""
    for v, lst in enumerate(assignment.lists):
        for color in lst:
            if not 0 <= color < assignment.num_colors:
                raise ColorOutOfRange(
                    f"vertex {v} lists color {color}, universe is [0, {assignment.num_colors})"
                )
    return VertexColorGraph(assignment.n, assignment.num_colors, assignment.lists)


def _hopcroft_karp(adj, n_left: int, n_right: int):
    """Maximum bipartite matching in O(E * sqrt(V)); deterministic.

    Returns (match_left, match_right) with -1 for unmatched. Vertices and
    colors are always scanned in index order, so the matching (and every
    certificate derived from it) is reproducible.
    """
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    dist = [0] * n_left

    def bfs() -> bool:
        queue = deque()
        for v in range(n_left):
            if match_l[v] == -1:
                dist[v] = 0
                queue.append(v)
            else:
                dist[v] = -1
        found_free = False
        while queue:
            v = queue.popleft()
            for color in adj[v]:
                u = match_r[color]
                if u == -1:
                    found_free = True
                elif dist[u] == -1:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        return found_free

    def dfs(root: int) -> bool:
        # explicit stack (augmenting paths can be long); frames hold the
        # vertex, its color iterator, and the color currently explored
        stack = [[root, iter(adj[root]), -1]]
        while stack:
            frame = stack[-1]
            v, colors = frame[0], frame[1]
            descended = False
            for color in colors:
                u = match_r[color]
                if u == -1:
                    frame[2] = color
                    for fv, _, fcolor in stack:
                        match_l[fv] = fcolor
                        match_r[fcolor] = fv
                    return True
                if dist[u] == dist[v] + 1:
                    frame[2] = color
                    stack.append([u, iter(adj[u]), -1])
                    descended = True
                    break
            if not descended:
                dist[v] = -1
                stack.pop()
        return False

    while bfs():
        for v in range(n_left):
            if match_l[v] == -1:
                dfs(v)
    return match_l, match_r


def max_matching(graph: VertexColorGraph) -> list[tuple[int, int]]:
    """A maximum matching as sorted (vertex, color) pairs."""
    match_l, _ = _hopcroft_karp(graph.adj, graph.n_left, graph.n_right)
    return [(v, color) for v, color in enumerate(match_l) if color != -1]


def colorable(assignment: ListAssignment) -> ColorabilityResult:
    """Decide L-colorability of K_n, with a coloring or a Hall violator.

    The violator is the set S of vertices reachable by alternating paths
    from the unmatched vertices of a maximum matching, the standard
    deficiency certificate: |S| - |N(S)| equals n minus the matching size.
    """
    graph = build_adjacency(assignment)
    match_l, match_r = _hopcroft_karp(graph.adj, graph.n_left, graph.n_right)
    if all(color != -1 for color in match_l):
        return ColorabilityResult(coloring=tuple(match_l))

    in_s = [False] * graph.n_left
    neighborhood: set[int] = set()
    queue = deque()
    for v in range(graph.n_left):
        if match_l[v] == -1:
            in_s[v] = True
            queue.append(v)
    while queue:
        v = queue.popleft()
        for color in graph.adj[v]:
            if color not in neighborhood:
                neighborhood.add(color)
                u = match_r[color]
                # u == -1 would mean an augmenting path survived maximality
                if u != -1 and not in_s[u]:
                    in_s[u] = True
                    queue.append(u)
    violator_s = tuple(v for v in range(graph.n_left) if in_s[v])
    neighbors = tuple(sorted(neighborhood))
    if len(neighbors) >= len(violator_s):
        raise AssertionError("deficiency certificate failed its own recount")
    return ColorabilityResult(violator=(violator_s, neighbors))


def validate_assignment(assignment: ListAssignment, k: int, c: int) -> ValidityReport:
    """Check that every list has size k and every pair overlaps in <= c colors.

    Returns the first offending vertex (size violation) or vertex pair
    (overlap violation) in index order.
    """
    for v, lst in enumerate(assignment.lists):
        if len(lst) != k:
            return ValidityReport(valid=False, bad_vertex=v)
    masks = [_mask(lst) for lst in assignment.lists]
    for u in range(assignment.n):
        for v in range(u + 1, assignment.n):
            overlap = (masks[u] & masks[v]).bit_count()
            if overlap > c:
                return ValidityReport(valid=False, bad_pair=(u, v), overlap=overlap)
    return ValidityReport(valid=True)


def verify_coloring(assignment: ListAssignment, coloring) -> bool:
    """True iff the coloring is proper for K_n: distinct colors, each from its list."""
    colors = list(coloring)
    if len(colors) != assignment.n:
        return False
    if len(set(colors)) != len(colors):
        return False
    return all(color in assignment.lists[v] for v, color in enumerate(colors))


def _mask(colors) -> int:
    mask = 0
    for color in colors:
        mask |= 1 << color
    return mask
