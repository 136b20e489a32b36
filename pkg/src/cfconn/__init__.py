"""Conflict-free vertex-connection colorings: constructive tree coloring,
exact brute-force solvers and exhaustive verification sweeps."""

from .errors import CapExceededError, DisconnectedError, ParseError, ValidationError
from .exact import ExactResult, Ranking, exact_cfc, exact_ranking, exact_vcfc, is_valid_ranking
from .graph import (
    Graph,
    complete_graph,
    cut_vertices,
    cycle_graph,
    delete_vertex_components,
    is_connected,
    is_tree,
    is_two_connected,
    parse_edge_list,
    parse_graph6,
    path_graph,
    spanning_tree,
    star_graph,
)
from .treecolor import SplitterResult, color_graph, color_tree, find_splitter, moc, palette_size
from .verify import (
    EdgeColoring,
    VertexColoring,
    is_cf_edge_connected,
    is_cf_vertex_connected,
    path_is_conflict_free_edge,
    path_is_conflict_free_vertex,
)

__version__ = "0.1.0"
