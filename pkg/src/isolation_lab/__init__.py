"""Exact isolation/domination invariant toolkit for graph products and
Sierpinski graphs: certified solvers, constructive set builders, and a
verification harness."""

from .core import (
    Graph,
    GraphFamilySpec,
    VertexSet,
    build_graph,
    closed_neighborhood,
    induced_subgraph,
    is_connected,
    is_dominating,
    is_independent,
    is_isolating,
    is_isolating_given_dominated,
    is_total_dominating,
    parse_graph,
    serialize_graph,
    standard_family,
)
from .solvers import (
    BudgetExceededError,
    InvariantResult,
    classic_invariants,
    clique_number,
    domination_number,
    independence_domination_number,
    independence_number,
    is_k_colorable,
    isolation_number,
    isolation_number_given_dominated,
    matching_number,
    max_k_colorable_subgraph,
    maximal_independent_sets,
    minimum_isolating_set_below,
    saturation_number,
    set_domination_number,
    total_domination_number,
    two_packing_number,
    vertex_cover_number,
)
from .products import ProductGraph, cartesian_product, fiber, lexicographic_product, project
from .sierpinski import (
    ExtremeIsolationResult,
    SierpinskiBounds,
    SierpinskiGraph,
    VertexCapExceeded,
    direct_isolation_number,
    extreme_isolation_number,
    recursive_isolating_set,
    sierpinski_bounds,
    sierpinski_graph,
)
from .constructions import (
    CertificateError,
    CertifiedSet,
    EnumerationCapExceeded,
    HypothesisError,
    IsolationGraph,
    NonBipartiteError,
    bipartition,
    clique_coloring_isolating_set,
    independence_split_isolating_set,
    isolation_graph,
    lexicographic_isolating_set,
    prism_isolating_set,
    saturation_isolating_set,
    vertex_cover_product_isolating_set,
)

__all__ = [name for name in dir() if not name.startswith("_")]
