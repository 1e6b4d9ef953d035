"""Equivalence classes, incidence lists, hypergraphs, and hard instances."""

import pytest

from choosability import solver
from choosability.bounds import AdmissibilityViolated
from choosability.construction import (
    ClassSpace,
    Hypergraph,
    ZeroPair,
    augmented_hypergraph,
    class_of,
    classes,
    furedi_hypergraph,
    hard_instance,
    list_of_class,
    origin_line,
    verify_design,
)
from choosability.gf import FiniteField

ADMISSIBLE_16 = [(q, c) for q in (3, 4, 5, 7, 8, 9, 11, 13, 16)
                 for c in range(1, q - 1) if (q - 1) % c == 0]


# -- classes -------------------------------------------------------------------

def test_class_counts():
    assert len(classes(FiniteField(5), 2)) == 12  # (25 - 1) / 2
    assert len(classes(FiniteField(7), 3)) == 16  # (49 - 1) / 3
    eight = classes(FiniteField(3), 1)
    assert len(eight) == 8
    # with the trivial subgroup every nonzero pair is its own class
    assert [(cls.a, cls.b) for cls in eight] == [
        (0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)]


def test_orbit_structure():
    for q, c in ADMISSIBLE_16:
        space = ClassSpace(FiniteField(q), c)
        assert len(space.classes()) * c == q * q - 1
        assert len(space.subgroup) == c


def test_class_of_examples():
    field = FiniteField(5)
    cls = class_of(field, 2, 1, 2)
    assert (cls.a, cls.b) == (1, 2)
    # (4, 3) = 4 * (1, 2) lies in the same orbit under H = {1, 4}
    assert class_of(field, 2, 4, 3) == cls
    assert class_of(FiniteField(3), 1, 2, 1) == class_of(FiniteField(3), 1, 2, 1)


def test_class_of_zero_pair_rejected():
    with pytest.raises(ZeroPair):
        class_of(FiniteField(5), 2, 0, 0)


def test_ids_follow_representative_order():
    for q, c in [(5, 2), (7, 3), (9, 4)]:
        cls_list = classes(FiniteField(q), c)
        reps = [(cls.a, cls.b) for cls in cls_list]
        assert reps == sorted(reps)
        assert [cls.id for cls in cls_list] == list(range(len(cls_list)))


# -- incidence lists -------------------------------------------------------------

def _members_from_raw_pair(space, a, b):
    """Incidence membership computed directly from an arbitrary orbit
    member (a, b), without canonicalizing it first."""
    fld = space.field
    return frozenset(
        cls.id for cls in space.classes()
        if fld.add(fld.mul(a, cls.a), fld.mul(b, cls.b)) in space.subgroup
    )


def test_list_of_class_gf3_example():
    # over GF(3) with H = {1}: members of L<1,0> solve x = 1, so the
    # classes are exactly (1,0), (1,1), (1,2)
    field = FiniteField(3)
    members = list_of_class(field, 1, class_of(field, 1, 1, 0))
    assert sorted((cls.a, cls.b) for cls in members) == [(1, 0), (1, 1), (1, 2)]


def test_list_sizes_are_q():
    for q, c in ADMISSIBLE_16:
        space = ClassSpace(FiniteField(q), c)
        for cls in space.classes():
            assert len(space.list_of_class(cls)) == q


def test_lists_well_defined_across_orbit_members():
    for q, c in [(5, 2), (7, 3), (9, 2)]:
        space = ClassSpace(FiniteField(q), c)
        fld = space.field
        for cls in space.classes()[:6]:
            reference = _members_from_raw_pair(space, cls.a, cls.b)
            for t in space.subgroup:
                scaled = _members_from_raw_pair(
                    space, fld.mul(t, cls.a), fld.mul(t, cls.b))
                assert scaled == reference
            assert frozenset(m.id for m in space.list_of_class(cls)) == reference


def test_intersection_dichotomy():
    for q, c in [(5, 2), (7, 3), (8, 1), (9, 4), (16, 5)]:
        space = ClassSpace(FiniteField(q), c)
        member_sets = [frozenset(m.id for m in space.list_of_class(cls))
                       for cls in space.classes()]
        for i in range(len(member_sets)):
            for j in range(i + 1, len(member_sets)):
                assert len(member_sets[i] & member_sets[j]) in (0, c)


def test_incidence_symmetry_and_regularity():
    for q, c in [(5, 2), (7, 3), (9, 2), (13, 6)]:
        hypergraph = furedi_hypergraph(q, c)
        edge_sets = [set(edge) for edge in hypergraph.edges]
        for u in range(hypergraph.n_vertices):
            for v in edge_sets[u]:
                assert u in edge_sets[v]
        degrees = [0] * hypergraph.n_vertices
        for edge in hypergraph.edges:
            for v in edge:
                degrees[v] += 1
        assert degrees == [q] * hypergraph.n_vertices


# -- origin lines -----------------------------------------------------------------

def test_origin_line_examples():
    field5 = FiniteField(5)
    line = origin_line(field5, 2, 0)
    assert sorted((cls.a, cls.b) for cls in line) == [(1, 0), (2, 0)]
    field3 = FiniteField(3)
    line = origin_line(field3, 1, 1)
    assert sorted((cls.a, cls.b) for cls in line) == [(1, 1), (2, 2)]


def test_origin_line_sizes_disjointness_transversality():
    for q, c in [(5, 2), (7, 3), (9, 4), (8, 1)]:
        space = ClassSpace(FiniteField(q), c)
        lines = [frozenset(cls.id for cls in space.origin_line(m))
                 for m in range(q)]
        for line in lines:
            assert len(line) == (q - 1) // c
        for i in range(q):
            for j in range(i + 1, q):
                assert not lines[i] & lines[j]
        for cls in space.classes():
            members = frozenset(m.id for m in space.list_of_class(cls))
            for line in lines:
                assert len(line & members) <= 1


# -- augmented hypergraph and hard instance ---------------------------------------

def test_augmented_examples():
    hypergraph = augmented_hypergraph(5, 2)
    assert hypergraph.n_vertices == 13
    assert len(hypergraph.edges) == 14
    assert all(len(edge) == 5 for edge in hypergraph.edges)
    small = augmented_hypergraph(3, 1)
    assert small.n_vertices == 9
    assert len(small.edges) == 10
    assert all(len(edge) == 3 for edge in small.edges)


def test_bundles_meet_only_in_fresh_vertex():
    for q, c in [(5, 2), (7, 3), (9, 4), (3, 1)]:
        hypergraph = augmented_hypergraph(q, c)
        fresh = hypergraph.n_vertices - 1
        bundle1, bundle2 = (set(e) for e in hypergraph.edges[-2:])
        assert fresh in bundle1 and fresh in bundle2
        assert bundle1 & bundle2 == {fresh}


def test_augmented_inadmissible():
    with pytest.raises(AdmissibilityViolated):
        augmented_hypergraph(4, 3)  # c = q - 1
    with pytest.raises(AdmissibilityViolated):
        augmented_hypergraph(7, 4)  # 4 does not divide 6
    with pytest.raises(AdmissibilityViolated):
        hard_instance(6, 1)  # not a prime power


def test_augmented_designs_verify():
    for q, c in ADMISSIBLE_16:
        report = verify_design(augmented_hypergraph(q, c), q, c)
        assert report.ok, report.violations


def test_hard_instance_shapes():
    inst = hard_instance(5, 2)
    assert (inst.n, inst.k, inst.num_colors) == (14, 5, 13)
    inst = hard_instance(3, 1)
    assert (inst.n, inst.k, inst.num_colors) == (10, 3, 9)
    assert inst.meta["construction"] == "furedi-augmented"
    assert inst.meta["p"] == 3 and inst.meta["m"] == 1 and inst.meta["modulus"] is None
    inst16 = hard_instance(16, 3)
    assert inst16.meta["modulus"] is not None
    assert len(inst16.meta["modulus"]) == 5  # degree-4 modulus over GF(2)


def test_hard_instance_valid_and_one_color_short():
    for q, c in ADMISSIBLE_16:
        inst = hard_instance(q, c)
        assert inst.n == (q * q - 1) // c + 2
        assert inst.num_colors == inst.n - 1
        assert solver.validate_assignment(inst, q, c).valid


# -- design verification ------------------------------------------------------------

def test_verify_design_passes_on_furedi():
    report = verify_design(furedi_hypergraph(5, 2), 5, 2)
    assert report.ok
    assert report.n_vertices == 12 and report.n_edges == 12
    assert report.max_intersection == 2
    assert report.intersection_sizes == (0, 2)
    assert report.degree_histogram == {5: 12}


def test_verify_design_flags_uniformity_violation():
    base = furedi_hypergraph(5, 2)
    edges = list(base.edges)
    edges[3] = edges[3][:-1]  # plant a defect: drop one vertex
    broken = Hypergraph(base.n_vertices, tuple(edges), 5, 2)
    report = verify_design(broken, 5, 2)
    assert not report.ok
    assert any("edge 3" in v and "size 4" in v for v in report.violations)


def test_verify_design_flags_intersection_violation():
    base = furedi_hypergraph(3, 1)
    edges = base.edges + (base.edges[0],)  # duplicate edge overlaps in q > c
    report = verify_design(Hypergraph(base.n_vertices, edges, 3, 1), 3, 1)
    assert not report.ok
    assert any("intersect" in v for v in report.violations)
