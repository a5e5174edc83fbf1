"""topcent: exact top-k closeness and harmonic centrality via pruned BFS."""

from .backend import BACKEND_NAME
from .baseline import CentralityTable, closeness_all, harmonic_all, topk_reference
from .bfs import BfsResult, LevelSnapshot, bfs
from .bfscut import CutResult, bfs_cut
from .gadget import (GadgetGraph, TdsInstance, brute_two_disjoint_sets,
                     build_gadget, closeness_pair, decide_via_centrality)
from .graph import (EdgeListParseError, Graph, UNREACHED,
                    degree_descending_order, parse_edge_list)
from .level_bound import (LevelProfile, LbResult, directed_level_bounds,
                          level_bound_direct, level_lower_bounds, level_profile)
from .nb_bound import NbBounds, neighborhood_lower_bounds, tree_closeness
from .reach import (ReachInfo, SccDag, exact_reach_undirected,
                    reach_interval_bounds, reach_info, scc_condensation)
from .scores import TopKEntry, TopKResult, compare_farness
from .solver import AUTO_VARIANT, VARIANTS, improvement_factor, topk

__version__ = "0.1.0"

__all__ = [
    "BACKEND_NAME", "BfsResult", "CentralityTable", "CutResult",
    "EdgeListParseError", "GadgetGraph", "Graph", "LbResult", "LevelProfile",
    "LevelSnapshot", "NbBounds", "ReachInfo", "SccDag", "TdsInstance",
    "TopKEntry", "TopKResult", "UNREACHED", "AUTO_VARIANT", "VARIANTS",
    "bfs", "bfs_cut", "brute_two_disjoint_sets", "build_gadget",
    "closeness_all", "closeness_pair", "compare_farness",
    "decide_via_centrality", "degree_descending_order",
    "directed_level_bounds", "exact_reach_undirected", "harmonic_all",
    "improvement_factor", "level_bound_direct", "level_lower_bounds",
    "level_profile", "neighborhood_lower_bounds", "parse_edge_list",
    "reach_info", "reach_interval_bounds", "scc_condensation", "topk",
    "topk_reference", "tree_closeness",
]
