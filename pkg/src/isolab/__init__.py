"""isolab: exact and spectral bounds for graph edge expansion.

The package computes the isoperimetric number, Cheeger constant and cut
sparsity of small graphs exactly, and the classical eigenvalue / linear
programming bounds that sandwich them: algebraic-connectivity bounds,
polynomial bounds for graph powers, and the metric LP machinery with its
closed-form certificates on distance-regular graphs.
"""

from .graphs import (
    Graph,
    DistanceMatrix,
    CutResult,
    NeighborStats,
    build_graph,
    generate,
    cartesian_product,
    graph_power,
    complement,
    gm_switch,
    induced_subgraph,
    distances,
    cut_metrics,
    common_neighbor_stats,
)
from .graph6 import parse_graph6, to_graph6, load_graph6_file
from .corpus import corpus_names, load_named, load_all

__version__ = "0.1.0"
