"""Token graphs of small simple graphs.

Builds k-token graphs, constructs pairwise internally disjoint path families
between distance-2 configurations over trees, and checks the results against
flow-based connectivity oracles.
"""

from .connectivity import (
    ConnectivityReport,
    brute_force_connectivity,
    edge_connectivity,
    local_vertex_connectivity,
    vertex_connectivity,
)
from .families import (
    Case1Context,
    Case2Context,
    FamilyConstructionError,
    FamilyResult,
    PathFamily,
    Reduction,
    build_family,
    construct_disjoint_family,
    normalize,
)
from .graphs import (
    Graph,
    Graph6Error,
    bridged_cliques,
    complete_graph,
    cycle_graph,
    distance,
    emit_graph6,
    enumerate_trees,
    girth,
    parse_graph6,
    path_graph,
    star_graph,
    tree_canonical_form,
)
from .moves import (
    TokenMove,
    TokenPath,
    TraceCondition,
    check_trace,
    concat,
    distractor_wrap,
    lift_path,
    pairwise_internally_disjoint,
    path_type,
    trace_condition,
)
from .tokens import (
    Case1Pair,
    Case2Pair,
    TokenGraph,
    build_token_graph,
    classify_distance2,
    complement_iso,
    make_config,
    min_token_degree,
    move_token,
    token_degree,
)

__version__ = "0.1.0"
