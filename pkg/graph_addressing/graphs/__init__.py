from graph_addressing.graphs.core import (
    DisconnectedGraphError,
    Family,
    Graph,
    GraphError,
    GraphSizeError,
    Multigraph,
    all_pairs_distances,
    diameter,
    distance_multigraph,
)
from graph_addressing.graphs.families import (
    add_edges,
    cartesian_product,
    gen_clebsch,
    gen_complete,
    gen_complete_multipartite,
    gen_cycle,
    gen_hamming,
    gen_johnson,
    gen_path,
    gen_petersen,
    gen_star,
    gen_tree,
    gen_triangular,
)
from graph_addressing.graphs.specs import GraphSpecError, load_graph, parse_graph_spec

__all__ = [
    "DisconnectedGraphError",
    "Family",
    "Graph",
    "GraphError",
    "GraphSizeError",
    "GraphSpecError",
    "Multigraph",
    "add_edges",
    "all_pairs_distances",
    "cartesian_product",
    "diameter",
    "distance_multigraph",
    "gen_clebsch",
    "gen_complete",
    "gen_complete_multipartite",
    "gen_cycle",
    "gen_hamming",
    "gen_johnson",
    "gen_path",
    "gen_petersen",
    "gen_star",
    "gen_tree",
    "gen_triangular",
    "load_graph",
    "parse_graph_spec",
]
