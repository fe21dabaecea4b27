"""Vertex cuts whose induced subgraph is edgeless, a forest or bipartite.

Small-graph toolkit: graph6 I/O, cut search and constructions, exact quality
functions, minimal-counterexample filters, extremal families and an
exhaustive census for the edge-count thresholds.
"""

from .cuts import (
    BIPARTITE,
    INDEPENDENT_GATE,
    CONJECTURE,
    FOREST,
    PRESETS,
    CutCertificate,
    CutClass,
    PreconditionError,
    QualityParams,
    Separation,
    Theorem,
    below_threshold,
    enumerate_cuts,
    extend_independent_to_forest,
    find_cut,
    glue_cuts,
    is_cut,
    propagation_case,
    lift_merged_cut,
    modularity_split,
    quality,
    separation_from_cut,
)
from .graph import (
    FourKind,
    Graph,
    GraphError,
    add_edge,
    classify_four,
    components,
    from_edge_list,
    induced,
    is_bipartite,
    is_connected,
    is_forest,
    is_independent,
    is_k_connected,
    members,
    merge_two,
    parse_graph6,
    to_graph6,
    vset,
)

__version__ = "0.1.0"

__all__ = [
    "add_edge",
    "below_threshold",
    "BIPARTITE",
    "INDEPENDENT_GATE",
    "classify_four",
    "components",
    "CONJECTURE",
    "CutCertificate",
    "CutClass",
    "enumerate_cuts",
    "extend_independent_to_forest",
    "find_cut",
    "FOREST",
    "FourKind",
    "from_edge_list",
    "glue_cuts",
    "Graph",
    "GraphError",
    "induced",
    "is_bipartite",
    "is_connected",
    "is_cut",
    "is_forest",
    "is_independent",
    "is_k_connected",
    "propagation_case",
    "lift_merged_cut",
    "members",
    "merge_two",
    "modularity_split",
    "parse_graph6",
    "PreconditionError",
    "PRESETS",
    "quality",
    "QualityParams",
    "Separation",
    "separation_from_cut",
    "Theorem",
    "to_graph6",
    "vset",
]
