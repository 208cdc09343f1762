"""Fractal, information, and Tsallis information dimensions of networks.

Pipeline: load a graph, reduce to its largest connected component, compute
all-pairs hop distances, cover the network with boxes of growing size via
greedy coloring of the distance-threshold auxiliary graph, then fit
q-parameterized entropies of the box-occupation probabilities against log
box size.
"""

__version__ = "0.1.0"

from .boxcover import (
    BoxCovering,
    CoveringProfile,
    auxiliary_graph,
    box_cover,
    brute_force_cover,
    covering_profile,
    greedy_coloring,
)
from .dimension import (
    DimensionEstimate,
    FitError,
    ProfilePoint,
    box_counting_dimension,
    fit_slope,
    information_dimension,
    q_sweep,
    tsallis_dimension,
)
from .generators import GenerationError, GeneratorSpec, generate
from .graphs import (
    UNREACHABLE,
    DisconnectedGraphError,
    DistanceMatrix,
    Graph,
    GraphParseError,
    all_pairs_distances,
    bfs_distances,
    largest_connected_component,
    parse_edge_list,
    parse_pajek,
)
from .qentropy import (
    box_probabilities,
    information_volume,
    q_log,
    shannon_entropy,
    tsallis_entropy,
)

__all__ = [
    "__version__",
    "BoxCovering",
    "CoveringProfile",
    "DimensionEstimate",
    "DisconnectedGraphError",
    "DistanceMatrix",
    "FitError",
    "GenerationError",
    "GeneratorSpec",
    "Graph",
    "GraphParseError",
    "ProfilePoint",
    "UNREACHABLE",
    "all_pairs_distances",
    "auxiliary_graph",
    "bfs_distances",
    "box_counting_dimension",
    "box_cover",
    "box_probabilities",
    "brute_force_cover",
    "covering_profile",
    "fit_slope",
    "generate",
    "greedy_coloring",
    "information_dimension",
    "information_volume",
    "largest_connected_component",
    "parse_edge_list",
    "parse_pajek",
    "q_log",
    "q_sweep",
    "shannon_entropy",
    "tsallis_dimension",
]
