"""Goldberg snark construction, cordial labeling, and exact certification."""

from .certificate import SearchStats, SnarkCertificate, snark_certificate
from .coloring import ColoringSearch, find_3_edge_coloring, solve_3_edge_coloring
from .compositions import (
    AttachmentPolicy,
    CompositeGraph,
    one_point_union_paths,
    open_star,
    path_union,
)
from .goldberg import GoldbergGraph, block_subgraph, goldberg
from .graph import (
    BudgetExceededError,
    DuplicateEdgeError,
    Graph,
    GraphError,
    NonEdgeError,
    NotCubicError,
    ParameterError,
    SelfLoopError,
    VertexCoord,
    VertexRangeError,
    add_edge,
    are_isomorphic,
    cyclic_edge_connectivity_ge,
    degree_sequence,
    delete_edges,
    duplicate_vertex,
    find_bridges,
    girth,
    is_connected,
    is_cubic,
    new_graph,
    petersen,
    subdivide_edge,
)
from .labeling import (
    CordialityReport,
    Labeling,
    LabelingError,
    PatternSchedule,
    apply_schedule,
    complement,
    cordiality_report,
    induce_edge_labels,
    label_one_point_union,
    label_open_star,
    label_path_union,
    one_point_union_schedule,
    open_star_schedule,
    path_union_schedule,
    pattern1,
    pattern2,
    schedule_for,
)
from .search import (
    CordialSearchResult,
    SearchBudget,
    search_cordial,
)

__all__ = [name for name in dir() if not name.startswith("_")]
