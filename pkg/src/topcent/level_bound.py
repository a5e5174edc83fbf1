"""Post-BFS level-difference bounds: one full BFS from s lower-bounds the
farness of every node it reaches, using only per-level counts.

The distance between nodes at levels i and j is at least |i - j|; nodes
within one level of v are priced at 2 (except v's own neighbors at 1), so the
per-level bound is

    L(i) = 2 * sum of counts at levels i-1, i, i+1
         + sum over |j - i| > 1 of count_j * |j - i|  -  2

with counts zero outside [1, maxD]; a node v at level i gets L(i) - deg(v).
L(1) is evaluated directly; higher levels come from the telescoped update
L(i) = L(i-1) + cum(<= i-3) - cum(> i+1), which the tests check against the
direct form.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .backend import kernels
from .graph import Graph
from .reach import MODE_INTERVAL, ReachInfo

NO_BOUND = -1


@dataclass
class LevelProfile:
    """Level counts of one BFS (index 1..maxD) and the derived bounds."""
    maxD: int
    gamma: np.ndarray      # gamma[i] = count at level i; gamma[0] unused (0)
    cum_leq: np.ndarray    # cum_leq[i] = sum of gamma[1..i]
    cum_gt: np.ndarray     # cum_gt[i] = sum of gamma[i+1..maxD]
    level_bound: np.ndarray  # level_bound[i] = L(i), index 0 unused


def level_bound_direct(gamma, i: int) -> int:
    """L(i) straight from its definition; the oracle for the recurrence."""
    gamma = np.asarray(gamma, dtype=np.int64)
    maxd = len(gamma) - 1
    total = 0
    for j in range(1, maxd + 1):
        dj = abs(j - i)
        total += 2 * int(gamma[j]) if dj <= 1 else int(gamma[j]) * dj
    return total - 2


def level_profile(counts) -> LevelProfile:
    """Build the profile from level counts gamma_1..gamma_maxD."""
    body = np.asarray(counts, dtype=np.int64)
    maxd = len(body)
    gamma = np.zeros(maxd + 1, np.int64)
    gamma[1:] = body
    cum_leq = np.cumsum(gamma)
    total = int(cum_leq[-1])
    cum_gt = total - cum_leq
    lb = np.zeros(maxd + 1, np.int64)
    if maxd >= 1:
        lb[1] = level_bound_direct(gamma, 1)
        for i in range(2, maxd + 1):
            below = cum_leq[i - 3] if i - 3 >= 0 else 0
            above = cum_gt[i + 1] if i + 1 <= maxd else 0
            lb[i] = lb[i - 1] + int(below) - int(above)
    return LevelProfile(maxd, gamma, cum_leq, cum_gt, lb)


def directed_level_bounds(counts) -> np.ndarray:
    """One-sided variant: everything up to one level deeper is priced at 2,
    deeper levels at their level difference. Returns L_dir[1..maxD]."""
    body = np.asarray(counts, dtype=np.int64)
    maxd = len(body)
    gamma = np.zeros(maxd + 1, np.int64)
    gamma[1:] = body
    cum = np.cumsum(gamma)
    wsum = np.cumsum(gamma * np.arange(maxd + 1))
    total, wtotal = int(cum[-1]), int(wsum[-1])
    lb = np.zeros(maxd + 1, np.int64)
    for i in range(1, maxd + 1):
        near_end = min(i + 1, maxd)
        near = int(cum[near_end])
        far_cnt = total - near
        far_w = wtotal - int(wsum[near_end])
        lb[i] = 2 * near + (far_w - i * far_cnt) - 2
    return lb


@dataclass
class LbResult:
    """Bounds distributed by one full BFS from ``source``."""
    source: int
    dist: np.ndarray
    sum_dist: int              # exact total distance of the source
    reach: int                 # exact reach of the source
    bound_sum: np.ndarray      # per-node distance-sum lower bound, NO_BOUND if none
    bound_reach: int           # the reach count the bounds are valid for
    visited_arcs: int


def level_lower_bounds(g: Graph, s: int, reach: ReachInfo) -> LbResult:
    """Full BFS from s, then price every reached node off its level.

    Directed graphs restrict the bounds to nodes in s's own strongly
    connected component, where the reach count provably matches the
    source's; undirected components share their reach anyway.
    """
    dist, order, reached_cnt, arcs = kernels.bfs(g.indptr, g.indices, g.n, s)
    reached_mask = dist >= 0
    sum_dist = int(dist[reached_mask].sum())
    counts = np.bincount(dist[reached_mask])
    bound = np.full(g.n, NO_BOUND, np.int64)
    deg = g.out_degrees()
    if len(counts) > 1:
        body = counts[1:]
        if g.directed:
            lb = directed_level_bounds(body)
        else:
            lb = level_profile(body).level_bound
        scope = reached_mask.copy()
        scope[s] = False
        if g.directed and reach.mode == MODE_INTERVAL:
            comp = reach.dag.comp_of
            scope &= comp == comp[s]
        idx = np.flatnonzero(scope)
        vals = lb[dist[idx]] - deg[idx]
        bound[idx] = np.maximum(vals, 0)
    return LbResult(s, dist, sum_dist, int(reached_cnt), bound,
                    int(reached_cnt), int(arcs))
