"""Extremal list assignments and separation choosability of complete graphs.

Builds finite-field list assignments on K_n that are valid for a given
pairwise-intersection cap yet use fewer colors than vertices, decides
list-colorability by bipartite matching with Hall-violator certificates,
and computes exact-rational bounds (with the windows of n where lower and
upper bound meet) plus a desk-scale exhaustive oracle.
"""

from .bounds import (
    AdmissibilityViolated,
    BoundsReport,
    ExactWindow,
    admissible_prime_powers,
    bounds_report,
    exact_window,
    find_admissible_prime,
    is_admissible,
    johnson_bound,
    johnson_threshold,
    ktv_reference_bounds,
    lower_bound_asymptotic,
    lower_bound_constructive,
    upper_bound,
    vertex_count_bound,
)
from .construction import (
    ClassSpace,
    DesignReport,
    Hypergraph,
    ProjClass,
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
from .gf import FiniteField, NotPrimePower, OrderUnavailable, ZeroHasNoOrder
from .instances import ListAssignment, assignment_from_lists
from .oracle import (
    ProbeReport,
    SearchTooLarge,
    SmallGraph,
    canonical_form,
    complete_graph,
    conjecture_probe,
    enumerate_canonical_assignments,
    exact_chi_l_complete,
    exact_chi_l_graph,
    iter_canonical_assignments,
    list_colorable_graph,
)
from .solver import (
    ColorOutOfRange,
    ColorabilityResult,
    ValidityReport,
    VertexColorGraph,
    build_adjacency,
    colorable,
    max_matching,
    validate_assignment,
    verify_coloring,
)

__version__ = "0.1.0"
