"""Neighborhood-count machinery: exact tree closeness and whole-graph
farness lower bounds from per-level path-count upper bounds."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .backend import kernels
from .baseline import CentralityTable
from .graph import Graph
from .reach import MODE_INTERVAL, ReachInfo
from .scores import INF_PAIR


def tree_closeness(g: Graph) -> CentralityTable:
    """Exact closeness on an undirected tree via the level-count recurrence.

    Counting nodes per BFS level through neighbor sums is exact when there are
    no cycles, so one sweep prices every node at once instead of n BFS runs.
    """
    if g.directed:
        raise ValueError("tree_closeness requires an undirected graph")
    if g.m != g.n - 1:
        raise ValueError(f"not a tree: m={g.m}, expected n-1={g.n - 1}")
    if g.n > 1:
        _, _, reached, _ = kernels.bfs(g.indptr, g.indices, g.n, 0)
        if reached != g.n:
            raise ValueError("not a tree: graph is disconnected")
    sums, levels = kernels.tree_level_sums(g.indptr, g.indices, g.n)
    value = np.zeros(g.n, np.float64)
    if g.n > 1:
        value = (g.n - 1) / sums.astype(np.float64)
    reached = np.full(g.n, g.n, np.int64)
    return CentralityTable("closeness", value, sums, reached,
                           visited_arcs=0, levels_used=int(levels))


@dataclass
class NbBounds:
    """Per-node farness lower bounds as exact (sum, reach) pairs.

    ``pairs[v] == INF_PAIR`` marks nodes that reach at most themselves. The
    harmonic field is the mirrored per-node upper bound on the harmonic score.
    """
    pairs: list[tuple[int, int]]
    harmonic_ub: np.ndarray
    finish_level: np.ndarray
    levels_used: int


def neighborhood_lower_bounds(g: Graph, reach: ReachInfo) -> NbBounds:
    """Lower-bound every node's farness with one O(m) sweep per level.

    With exact reach counts the sweep follows the tree recurrence (counts are
    upper bounds off trees) and truncates each node at its reach. With
    interval reach the bound is minimized over the candidate reach values
    that can host a local minimum: both interval ends and the running prefix
    sums between them.
    """
    deg = g.out_degrees().astype(np.int64)
    if reach.mode == MODE_INTERVAL:
        best_s, best_r, h_ub, finish, levels = kernels.nb_interval(
            g.indptr, g.indices, deg, reach.lo, reach.hi, g.n)
        pairs = [INF_PAIR if best_r[v] <= 1 else (int(best_s[v]), int(best_r[v]))
                 for v in range(g.n)]
    else:
        r = reach.exact
        s_lb, h_ub, finish, levels = kernels.nb_exact(
            g.indptr, g.indices, deg, r, g.n, not g.directed)
        pairs = [INF_PAIR if r[v] <= 1 or deg[v] == 0 else (int(s_lb[v]), int(r[v]))
                 for v in range(g.n)]
    return NbBounds(pairs, h_ub, finish, int(levels))
