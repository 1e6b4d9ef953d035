"""Finite-field constructions of extremal list assignments for K_n.

For a prime power q and a cap c dividing q-1, the nonzero pairs of
GF(q) x GF(q) split into (q^2-1)/c equivalence classes under coordinatewise
scaling by the order-c multiplicative subgroup H. Each class <a,b> carries
the q-element incidence list of classes <x,y> with a*x + b*y in H; distinct
lists meet in 0 or exactly c classes. Those lists form a q-uniform
hypergraph with as many edges as vertices; adding one fresh vertex and two
"bundle" edges built from origin lines y = m*x tips the edge count past the
vertex count. Reading the edges of the augmented hypergraph as color lists
yields a (q,c)-valid assignment on K_n, n = (q^2-1)/c + 2, that uses only
n - 1 colors in total and is therefore not properly colorable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .bounds import check_admissible
from .gf import FiniteField
from .instances import ListAssignment


class ZeroPair(ValueError):
    """(0, 0) has no equivalence class."""


@dataclass(frozen=True, order=True)
class ProjClass:
    """An equivalence class of nonzero pairs, named by its canonical member.

    (a, b) is the lexicographically smallest pair in the orbit; ids number
    the classes in order of their canonical representatives.
    """

    a: int
    b: int
    id: int


@dataclass(frozen=True)
class Hypergraph:
    """Edge list over vertex ids [0, n_vertices), with design metadata.

    `uniformity` and `intersection_cap` record what the construction is
    supposed to satisfy; verify_design checks whether it actually does.
    """

    n_vertices: int
    edges: tuple[tuple[int, ...], ...]
    uniformity: int
    intersection_cap: int


class ClassSpace:
    """The classes of GF(q) x GF(q) minus the origin under scaling by H.

    Precomputes the subgroup H, the canonical representative of every
    nonzero pair, and the id-ordered class list, so membership and
    incidence queries are dictionary lookups. Immutable once built.
    """

    def __init__(self, fld: FiniteField, c: int):
        q = fld.q
        self.field = fld
        self.c = c
        self.subgroup_gen = fld.element_of_order(c)
        subgroup = []
        t = 1
        for _ in range(c):
            subgroup.append(t)
            t = fld.mul(t, self.subgroup_gen)
        self.subgroup = frozenset(subgroup)

        rep_of_pair: dict[tuple[int, int], tuple[int, int]] = {}
        reps: list[tuple[int, int]] = []
        for a in range(q):
            for b in range(q):
                if (a == 0 and b == 0) or (a, b) in rep_of_pair:
                    continue
                orbit = {(fld.mul(t, a), fld.mul(t, b)) for t in subgroup}
                if len(orbit) != c:
                    raise AssertionError("scaling action is not free")
                rep = min(orbit)
                for pair in orbit:
                    rep_of_pair[pair] = rep
                reps.append(rep)
        reps.sort()
        self._classes = tuple(ProjClass(a, b, i) for i, (a, b) in enumerate(reps))
        self._by_rep = {(cls.a, cls.b): cls for cls in self._classes}
        self._rep_of_pair = rep_of_pair

    def classes(self) -> tuple[ProjClass, ...]:
        return self._classes

    def class_of(self, a: int, b: int) -> ProjClass:
        if a == 0 and b == 0:
            raise ZeroPair("(0, 0) does not belong to any class")
        return self._by_rep[self._rep_of_pair[(a, b)]]

    def list_of_class(self, cls: ProjClass) -> tuple[ProjClass, ...]:
        """The q classes <x,y> with a*x + b*y in H, in id order.

        Membership only depends on the classes involved, not on the chosen
        representatives, because H is closed under multiplication.
        """
        fld = self.field
        a, b = cls.a, cls.b
        return tuple(
            other for other in self._classes
            if fld.add(fld.mul(a, other.a), fld.mul(b, other.b)) in self.subgroup
        )

    def origin_line(self, slope: int) -> tuple[ProjClass, ...]:
        """The (q-1)/c classes of the punctured line y = slope * x, id order."""
        fld = self.field
        ids = {self.class_of(x, fld.mul(slope, x)) for x in range(1, fld.q)}
        return tuple(sorted(ids, key=lambda cls: cls.id))


@lru_cache(maxsize=None)
def _space(q: int, c: int) -> ClassSpace:
    return ClassSpace(FiniteField(q), c)


# -- operations on an explicit field ------------------------------------------

def classes(fld: FiniteField, c: int) -> list[ProjClass]:
    """All (q^2-1)/c classes, sorted by canonical representative."""
    return list(ClassSpace(fld, c).classes())


def class_of(fld: FiniteField, c: int, a: int, b: int) -> ProjClass:
    """The class containing the pair (a, b) != (0, 0)."""
    return ClassSpace(fld, c).class_of(a, b)


def list_of_class(fld: FiniteField, c: int, cls: ProjClass) -> tuple[ProjClass, ...]:
    """The incidence list attached to a class; always q classes."""
    return ClassSpace(fld, c).list_of_class(cls)


def origin_line(fld: FiniteField, c: int, slope: int) -> tuple[ProjClass, ...]:
    """Classes of solutions of y = slope * x, excluding the origin."""
    return ClassSpace(fld, c).origin_line(slope)


# -- hypergraphs and the hard instance ---------------------------------------

def furedi_hypergraph(q: int, c: int) -> Hypergraph:
    """The q-uniform hypergraph on class ids whose edge i is the incidence
    list of class i: (q^2-1)/c vertices and edges, intersections <= c."""
    space = _space(q, c)
    edges = tuple(
        tuple(member.id for member in space.list_of_class(cls))
        for cls in space.classes()
    )
    return Hypergraph(n_vertices=len(edges), edges=edges,
                      uniformity=q, intersection_cap=c)


def augmented_hypergraph(q: int, c: int) -> Hypergraph:
    """The hypergraph above plus one fresh vertex and two bundle edges.

    Each bundle is the fresh vertex together with c origin lines of
    consecutive slopes (field indices 0..c-1, then c..2c-1), which keeps
    the edges q-uniform and pairwise intersections within c while making
    the edge count exceed the vertex count by one.
    """
    check_admissible(q, c)
    base = furedi_hypergraph(q, c)
    space = _space(q, c)
    fresh = base.n_vertices
    bundles = []
    for start in (0, c):
        members = {fresh}
        for slope in range(start, start + c):
            members.update(cls.id for cls in space.origin_line(slope))
        bundles.append(tuple(sorted(members)))
    return Hypergraph(n_vertices=fresh + 1, edges=base.edges + tuple(bundles),
                      uniformity=q, intersection_cap=c)


def hard_instance(q: int, c: int) -> ListAssignment:
    """A (q,c)-valid list assignment on K_n, n = (q^2-1)/c + 2, with only
    n-1 colors in total, hence not properly colorable.

    Vertex i of K_n receives edge i of the augmented hypergraph: the class
    edges in id order, then the two bundles. Colors are the hypergraph's
    vertex ids.
    """
    hypergraph = augmented_hypergraph(q, c)
    fld = _space(q, c).field
    meta = {
        "q": q,
        "c": c,
        "p": fld.p,
        "m": fld.m,
        "modulus": list(fld.modulus) if fld.modulus is not None else None,
        "construction": "furedi-augmented",
    }
    return ListAssignment(n=len(hypergraph.edges), k=q, c=c,
                          num_colors=hypergraph.n_vertices,
                          lists=hypergraph.edges, meta=meta)


# -- design verification -------------------------------------------------------

@dataclass
class DesignReport:
    """Structural audit of a hypergraph against its declared parameters."""

    ok: bool
    n_vertices: int
    n_edges: int
    uniformity: int
    intersection_cap: int
    max_intersection: int
    intersection_sizes: tuple[int, ...]
    degree_histogram: dict[int, int]
    violations: list[str] = field(default_factory=list)


def verify_design(hypergraph: Hypergraph, q: int, c: int) -> DesignReport:
    """Check q-uniformity and the pairwise intersection cap c, and report
    counts, the observed intersection sizes, and the vertex degree
    histogram. Violations carry a concrete witness (edge or edge pair)."""
    violations = []
    degrees = [0] * hypergraph.n_vertices
    masks = []
    for i, edge in enumerate(hypergraph.edges):
        if len(set(edge)) != len(edge):
            violations.append(f"edge {i} repeats a vertex: {edge}")
        if len(edge) != q:
            violations.append(f"edge {i} has size {len(edge)}, expected {q}")
        mask = 0
        for v in edge:
            if not 0 <= v < hypergraph.n_vertices:
                violations.append(f"edge {i} references vertex {v} out of range")
            else:
                degrees[v] += 1
                mask |= 1 << v
        masks.append(mask)

    max_intersection = 0
    sizes = set()
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            size = (masks[i] & masks[j]).bit_count()
            sizes.add(size)
            if size > max_intersection:
                max_intersection = size
            if size > c:
                violations.append(
                    f"edges {i} and {j} intersect in {size} > {c} vertices"
                )

    histogram: dict[int, int] = {}
    for d in degrees:
        histogram[d] = histogram.get(d, 0) + 1
    return DesignReport(
        ok=not violations,
        n_vertices=hypergraph.n_vertices,
        n_edges=len(hypergraph.edges),
        uniformity=q,
        intersection_cap=c,
        max_intersection=max_intersection,
        intersection_sizes=tuple(sorted(sizes)),
        degree_histogram=dict(sorted(histogram.items())),
        violations=violations,
    )
