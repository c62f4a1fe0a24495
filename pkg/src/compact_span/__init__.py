"""Most and least compact spanning trees of simple unweighted graphs."""

from .baselines import random_tree_suite, wilson_random_tree
from .extraction import ExtractionOptions, ExtractionTrace, Mode, extract, select_extremal_edge
from .forest import (
    ForestMatrices,
    build_laplacian,
    downdate_after_deletion,
    edge_metrics,
    forest_matrices,
    forest_matrix,
    laplacian_pseudoinverse,
)
from .generators import GeneratorSpec, generate
from .graph import (
    Graph,
    complete_graph,
    degree_profile,
    is_connected,
    parse_graph,
    path_graph,
    read_graph,
    serialize_graph,
    star_graph,
    validate,
    write_graph,
)
from .metrics import apsp, compactness, diameter, validate_spanning_tree

__version__ = "0.1.0"
