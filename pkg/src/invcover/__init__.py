"""Hypergraph invertibility and minimal edge covers of complete and
complete-bipartite graphs: testing, constructions, reductions, a proof
auditor, closed-form bounds and small exact searches."""

from .core import ContractError, DomainError, Hypergraph, Permutation
from .cover import (
    CoverFamily,
    HostGraph,
    all_pairs_cover,
    canonical_form,
    essential_elements,
    is_edge_cover,
    is_isomorphic,
    is_minimal_edge_cover,
    part_degrees,
    prune_nonessential,
)
from .invertibility import (
    BipartiteCompatibilityGraph,
    DeficiencySet,
    Matching,
    build_compatibility_graph,
    find_deficiency_set,
    find_inverting_permutation,
    is_invertibility_critical,
    is_invertible,
    maximum_matching,
)
from .constructions import (
    bipartite_to_complete_cover,
    cover_to_critical,
    covers_union_to_edge_cover,
    critical_to_bipartite_cover,
    double_cover,
    edge_cover_to_cover_family,
    lower_bound_cover,
)
from .audit import (
    AuditFailure,
    AuditTrace,
    audit_all_roots,
    audit_upper_bound,
    bollobas_sum,
    extract_set_pairs,
    level_bounds_check,
    verify_cross_intersection,
)
from .bounds import BoundReport, bounds_b, bounds_b2, bounds_i
from .search import (
    BudgetExhausted,
    GeneralCoverInstance,
    SearchConfig,
    SearchOutcome,
    chain_check,
    encode_edge_cover_as_general,
    encode_perfect_matching,
    search_b,
    search_c,
    search_i,
    solve_general_cover,
)

__version__ = "0.1.0"

__all__ = [
    "AuditFailure",
    "AuditTrace",
    "BipartiteCompatibilityGraph",
    "BoundReport",
    "BudgetExhausted",
    "ContractError",
    "CoverFamily",
    "DeficiencySet",
    "DomainError",
    "GeneralCoverInstance",
    "HostGraph",
    "Hypergraph",
    "Matching",
    "Permutation",
    "SearchConfig",
    "SearchOutcome",
    "all_pairs_cover",
    "audit_all_roots",
    "audit_upper_bound",
    "bipartite_to_complete_cover",
    "bollobas_sum",
    "bounds_b",
    "bounds_b2",
    "bounds_i",
    "build_compatibility_graph",
    "canonical_form",
    "chain_check",
    "cover_to_critical",
    "covers_union_to_edge_cover",
    "critical_to_bipartite_cover",
    "double_cover",
    "edge_cover_to_cover_family",
    "encode_edge_cover_as_general",
    "encode_perfect_matching",
    "essential_elements",
    "extract_set_pairs",
    "find_deficiency_set",
    "find_inverting_permutation",
    "is_edge_cover",
    "is_invertibility_critical",
    "is_invertible",
    "is_isomorphic",
    "is_minimal_edge_cover",
    "level_bounds_check",
    "lower_bound_cover",
    "maximum_matching",
    "part_degrees",
    "prune_nonessential",
    "search_b",
    "search_c",
    "search_i",
    "solve_general_cover",
    "verify_cross_intersection",
]
