"""Distance spectral radius, essential connectivity and extremal graphs.

Small-scale tooling for bounding the distance spectral radius of graphs and
digraphs with prescribed essential connectivity: extremal constructions,
an enclosure-certified power iteration, exhaustive enumeration of small
graphs, and randomized lemma campaigns.
"""

__version__ = "0.1.0"

from .canon import canonical_form, canonical_order
from .census import enumerate_connected_graphs, run_census
from .connectivity import (
    EssentialCutCertificate,
    digraph_essential_connectivity,
    essential_connectivity,
    vertex_connectivity,
)
from .errors import (
    ConstructionInfeasible,
    InvalidArgument,
    NonConvergenceError,
    NotConnectedError,
    ParseError,
    PreconditionError,
    UnsupportedError,
)
from .extremal import (
    ExtremalSpec,
    Family,
    family_discriminant,
    theorem1_extremal,
    theorem2_extremal,
    theorem3_extremal,
)
from .formats import (
    parse_digraph6,
    parse_edge_list,
    parse_graph6,
    write_digraph6,
    write_edge_list,
    write_graph6,
)
from .graphs import (
    ComponentPartition,
    Digraph,
    Graph,
    bfs_distances,
    complete_digraph,
    complete_graph,
    connected_components,
    directed_join,
    disjoint_union,
    is_connected,
    is_strongly_connected,
    join,
    min_degree,
    strongly_connected_components,
)
from .spectral import (
    DistanceMatrix,
    SpectralResult,
    dense_eigen_oracle,
    directed_distance_matrix,
    distance_matrix,
    graph_spectral_radius,
    spectral_radius,
)
from .verify import (
    VerificationReport,
    check_arc_monotonicity,
    check_balancing_lemma,
    check_edge_monotonicity,
    verify_theorem1,
    verify_theorem2,
    verify_theorem3_family,
)

__all__ = [
    "__version__",
    "canonical_form",
    "canonical_order",
    "enumerate_connected_graphs",
    "run_census",
    "EssentialCutCertificate",
    "digraph_essential_connectivity",
    "essential_connectivity",
    "vertex_connectivity",
    "ConstructionInfeasible",
    "InvalidArgument",
    "NonConvergenceError",
    "NotConnectedError",
    "ParseError",
    "PreconditionError",
    "UnsupportedError",
    "ExtremalSpec",
    "Family",
    "family_discriminant",
    "theorem1_extremal",
    "theorem2_extremal",
    "theorem3_extremal",
    "parse_digraph6",
    "parse_edge_list",
    "parse_graph6",
    "write_digraph6",
    "write_edge_list",
    "write_graph6",
    "ComponentPartition",
    "Digraph",
    "Graph",
    "bfs_distances",
    "complete_digraph",
    "complete_graph",
    "connected_components",
    "directed_join",
    "disjoint_union",
    "is_connected",
    "is_strongly_connected",
    "join",
    "min_degree",
    "strongly_connected_components",
    "DistanceMatrix",
    "SpectralResult",
    "dense_eigen_oracle",
    "directed_distance_matrix",
    "distance_matrix",
    "graph_spectral_radius",
    "spectral_radius",
    "VerificationReport",
    "check_arc_monotonicity",
    "check_balancing_lemma",
    "check_edge_monotonicity",
    "verify_theorem1",
    "verify_theorem2",
    "verify_theorem3_family",
]
