"""Exactly 3-edge-connected multigraphs: verification, synthesis, enumeration.

Every pair of vertices of an exactly k-edge-connected graph is joined by
exactly k edge-disjoint paths.  For k = 3 such graphs are built from
dumbbells by cycle expansion and block gluing; this package implements
those operations, the inverse decomposition into replayable scripts,
exhaustive enumeration with canonical deduplication and an embedded
(planar) variant.
"""

from ._backend import BACKEND
from .canon import canonical_code, canonical_labeling, graph_from_code, is_isomorphic
from .connectivity import (
    ConnectivityReport,
    EdgeCut,
    collapse_supernodes,
    connectivity_matrix,
    exact_level,
    is_exactly_k,
    is_k_edge_connected,
    local_connectivity,
    minimum_cuts,
)
from .decompose import (
    BlockGlue,
    CycleExpand,
    Dumbbell,
    SynthesisScript,
    c_partition,
    counting_identity,
    decompose,
    find_collapsible_cycle,
    is_collapsible,
    replay,
    thick_tree_factor,
)
from .enumerate import (
    EnumerationQuery,
    EnumerationResult,
    brute_force_census,
    check_minimum_equivalence,
    enumerate_graphs,
    minimum_filter_admits,
)
from .errors import (
    ArgumentError,
    BudgetExceeded,
    DisconnectedGraphError,
    DomainError,
    Exact3Error,
    FormatError,
    InvariantViolation,
    NotExactError,
)
from .multigraph import (
    BlockDecomposition,
    Cycle,
    Dart,
    Multigraph,
    articulation_points,
    blocks,
    chordless_cycles,
    is_biconnected,
    smooth_degree2,
)
from .ops import (
    CycleExpansionSpec,
    VertexGluingSpec,
    block_glue,
    block_respecting_cycle_expand,
    contraction_expansion,
    cycle_contract,
    cycle_expand,
    dumbbell,
    k_bridge_add,
    vertex_glue,
    vertex_split,
)
from .planar import (
    RotationSystem,
    faces,
    order_preserving_contract,
    order_preserving_expand,
    planar_synthesize,
)

# package-level alias; the function is defined as enumerate_graphs to keep the builtin usable inside the module
enumerate = enumerate_graphs  # noqa: A001

__version__ = "0.1.0"

# the enumerate alias is left out so star imports keep the builtin
__all__ = [
    "ArgumentError",
    "BACKEND",
    "BlockDecomposition",
    "BlockGlue",
    "BudgetExceeded",
    "ConnectivityReport",
    "Cycle",
    "CycleExpand",
    "CycleExpansionSpec",
    "Dart",
    "DisconnectedGraphError",
    "DomainError",
    "Dumbbell",
    "EdgeCut",
    "EnumerationQuery",
    "EnumerationResult",
    "Exact3Error",
    "FormatError",
    "InvariantViolation",
    "Multigraph",
    "NotExactError",
    "RotationSystem",
    "SynthesisScript",
    "VertexGluingSpec",
    "articulation_points",
    "block_glue",
    "block_respecting_cycle_expand",
    "blocks",
    "brute_force_census",
    "c_partition",
    "canonical_code",
    "canonical_labeling",
    "check_minimum_equivalence",
    "chordless_cycles",
    "collapse_supernodes",
    "connectivity_matrix",
    "contraction_expansion",
    "counting_identity",
    "cycle_contract",
    "cycle_expand",
    "decompose",
    "dumbbell",
    "enumerate_graphs",
    "exact_level",
    "faces",
    "find_collapsible_cycle",
    "graph_from_code",
    "is_biconnected",
    "is_collapsible",
    "is_exactly_k",
    "is_isomorphic",
    "is_k_edge_connected",
    "k_bridge_add",
    "local_connectivity",
    "minimum_cuts",
    "minimum_filter_admits",
    "order_preserving_contract",
    "order_preserving_expand",
    "planar_synthesize",
    "replay",
    "smooth_degree2",
    "thick_tree_factor",
    "vertex_glue",
    "vertex_split",
    "__version__",
]
