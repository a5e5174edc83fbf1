"""Priority-driven exact top-k: pop the most promising unscored node, score
it with the chosen update strategy, stop once no remaining lower bound can
beat the k-th best finalized value.

Variants wire an initial-bound strategy (deg: none, nb: neighborhood sweep)
to an update strategy (cut: abortable BFS, bound: full BFS that also
improves other nodes' bounds):

    degcut, degbound, nbcut, nbbound, plus textbook (score everything).

Comparisons are exact for closeness (integer pairs) and tolerance-based for
harmonic, and pruning always requires strictly beating the k-th value, so
ties at the cutoff are never lost.
"""

from __future__ import annotations

import heapq
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .baseline import topk_reference
from .bfscut import bfs_cut
from .graph import Graph
from .level_bound import NO_BOUND, level_lower_bounds
from .nb_bound import neighborhood_lower_bounds
from .reach import ReachInfo, reach_info
from .scores import (HARMONIC_TOL, INF_PAIR, TopKResult, ZERO_PAIR,
                     assemble_closeness, assemble_harmonic, cmp_pairs,
                     compare_farness, pair_is_infinite)

VARIANTS = ("degcut", "degbound", "nbcut", "nbbound")
AUTO_VARIANT = "nbcut"

__all__ = ["topk", "improvement_factor", "compare_farness", "VARIANTS",
           "AUTO_VARIANT", "SolverDebug"]


class _FarnKey:
    """Heap key: farness lower bound pair, then higher degree, then node id."""

    __slots__ = ("pair", "deg", "node")

    def __init__(self, pair, deg, node):
        self.pair = pair
        self.deg = deg
        self.node = node

    def __lt__(self, other):
        c = cmp_pairs(self.pair, other.pair)
        if c:
            return c < 0
        if self.deg != other.deg:
            return self.deg > other.deg
        return self.node < other.node


class _MaxPair:
    """Negated-order wrapper so heapq keeps the k smallest farness pairs."""

    __slots__ = ("pair",)

    def __init__(self, pair):
        self.pair = pair

    def __lt__(self, other):
        return cmp_pairs(self.pair, other.pair) > 0


@dataclass
class SolverDebug:
    finalized: dict = field(default_factory=dict)
    pruned_nodes: list = field(default_factory=list)
    never_popped: list = field(default_factory=list)


def topk(g: Graph, k: int, variant: str = "auto", measure: str = "closeness",
         threads: int = 1, reach: ReachInfo | None = None,
         debug: bool = False) -> TopKResult:
    """Nodes whose centrality ties or beats the k-th best, with exact values.

    ``reach`` may be precomputed and shared across calls on the same graph.
    ``threads`` > 1 scores several queue heads concurrently against snapshot
    cutoffs; the returned entries are identical to a sequential run.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if measure not in ("closeness", "harmonic"):
        raise ValueError(f"unknown measure {measure!r}")
    variant = variant.lower()
    if variant == "auto":
        variant = AUTO_VARIANT
    if variant == "textbook":
        return topk_reference(g, k, measure)
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if reach is None:
        reach = reach_info(g)
    solver = _Solver(g, k, variant, measure, reach, max(1, int(threads)))
    return solver.run(debug)


def improvement_factor(result: TopKResult, g: Graph) -> float:
    """Textbook arc volume over arcs actually visited: n*m directed, 2*n*m
    undirected. Machine-independent measure of pruning effectiveness."""
    full = g.n * g.m * (1 if g.directed else 2)
    if result.m_vis == 0:
        return float("inf")
    return full / result.m_vis


class _Solver:
    def __init__(self, g, k, variant, measure, reach, threads):
        self.g = g
        self.k = k
        self.variant = variant
        self.measure = measure
        self.reach = reach
        self.threads = threads
        self.deg = g.out_degrees()
        self.closeness = measure == "closeness"
        self.uses_nb = variant.startswith("nb")
        self.uses_cut = variant.endswith("cut")
        self.m_vis = 0
        self.n_pruned = 0
        self.finalized: dict[int, object] = {}
        self.pruned: set[int] = set()
        self.bound: list = []
        self.stamp = np.zeros(g.n, np.int64)
        self.heap: list = []
        self.topheap: list = []  # k best finalized values seen so far

    # -- bounds ----------------------------------------------------------

    def _hopeless(self, v) -> bool:
        return self.deg[v] == 0 or int(self.reach.hi[v]) <= 1

    def _initial_bounds(self):
        g = self.g
        if self.uses_nb:
            nb = neighborhood_lower_bounds(g, self.reach)
            if self.closeness:
                self.bound = nb.pairs
            else:
                self.bound = [0.0 if self._hopeless(v) else float(nb.harmonic_ub[v])
                              for v in range(g.n)]
        elif self.closeness:
            self.bound = [INF_PAIR if self._hopeless(v) else ZERO_PAIR
                          for v in range(g.n)]
        elif self.variant == "degbound":
            # no level-based update exists for harmonic; seed with the degree
            # bound instead: neighbors score 1, everything else at most 1/2
            self.bound = [0.0 if self._hopeless(v)
                          else self.deg[v] + (int(self.reach.hi[v]) - 1 - self.deg[v]) / 2.0
                          for v in range(g.n)]
        else:
            self.bound = [0.0 if self._hopeless(v) else float("inf")
                          for v in range(g.n)]

    def _key(self, v):
        if self.closeness:
            return _FarnKey(self.bound[v], int(self.deg[v]), v)
        return (-self.bound[v], -int(self.deg[v]), v)

    # -- threshold over finalized values ----------------------------------

    def _threshold(self):
        """Current k-th best finalized value, or None while fewer than k."""
        if len(self.topheap) < self.k:
            return None
        return self.topheap[0].pair if self.closeness else self.topheap[0]

    def _note_final(self, value):
        if self.closeness:
            item = _MaxPair(value)
            if len(self.topheap) < self.k:
                heapq.heappush(self.topheap, item)
            elif cmp_pairs(value, self.topheap[0].pair) < 0:
                heapq.heapreplace(self.topheap, item)
        else:
            if len(self.topheap) < self.k:
                heapq.heappush(self.topheap, value)
            elif value > self.topheap[0]:
                heapq.heapreplace(self.topheap, value)

    def _beats_stop(self, key) -> bool:
        """True when the queue head's bound already rules its node out."""
        x = self._threshold()
        if x is None:
            return False
        if self.closeness:
            return cmp_pairs(key.pair, x) > 0
        return -key[0] < x - HARMONIC_TOL

    # -- scoring -----------------------------------------------------------

    def _score_node(self, v, x):
        if self.uses_cut:
            return v, bfs_cut(self.g, v, self.reach, x, self.measure)
        return v, (None if self._hopeless(v)
                   else level_lower_bounds(self.g, v, self.reach))

    def _apply_cut(self, v, res):
        self.m_vis += res.visited_arcs
        if res.pruned:
            self.n_pruned += 1
            self.pruned.add(v)
            return
        if self.closeness:
            pair = (res.sum_dist, res.reach)
            self.finalized[v] = pair
            if not pair_is_infinite(pair):
                self._note_final(pair)
        else:
            self.finalized[v] = res.harmonic
            self._note_final(res.harmonic)

    def _apply_lb(self, v, res):
        if res is None:
            self.finalized[v] = (0, 1) if self.closeness else 0.0
            if not self.closeness:
                self._note_final(0.0)
            return
        self.m_vis += res.visited_arcs
        if self.closeness:
            pair = (res.sum_dist, res.reach)
            self.finalized[v] = pair
            if not pair_is_infinite(pair):
                self._note_final(pair)
            self._merge_lb_bounds(res)
        else:
            dist = res.dist
            mask = dist > 0
            h = float((1.0 / dist[mask]).sum()) if mask.any() else 0.0
            self.finalized[v] = h
            self._note_final(h)

    def _merge_lb_bounds(self, res):
        r = res.bound_reach
        if r <= 1:
            return
        for v in np.flatnonzero(res.bound_sum != NO_BOUND):
            v = int(v)
            if v in self.finalized or v in self.pruned:
                continue
            cur = self.bound[v]
            if pair_is_infinite(cur):
                continue
            cand = (int(res.bound_sum[v]), r)
            if cmp_pairs(cand, cur) > 0:
                self.bound[v] = cand
                self.stamp[v] += 1
                heapq.heappush(self.heap, (self._key(v), int(self.stamp[v]), v))

    # -- main loop -----------------------------------------------------------

    def run(self, want_debug=False) -> TopKResult:
        g = self.g
        self._initial_bounds()
        self.heap = [(self._key(v), 0, v) for v in range(g.n)]
        heapq.heapify(self.heap)
        pool = ThreadPoolExecutor(self.threads) if self.threads > 1 else None
        try:
            while True:
                batch = self._pop_batch()
                if not batch:
                    break
                x = self._threshold()
                if pool is not None and len(batch) > 1:
                    results = list(pool.map(lambda v: self._score_node(v, x), batch))
                else:
                    results = [self._score_node(v, x) for v in batch]
                for v, res in results:
                    if self.uses_cut:
                        self._apply_cut(v, res)
                    else:
                        self._apply_lb(v, res)
        finally:
            if pool is not None:
                pool.shutdown()
        if self.closeness:
            entries, kth = assemble_closeness(self.finalized, g.labels, g.n, self.k)
        else:
            entries, kth = assemble_harmonic(self.finalized, g.labels, g.n, self.k)
        dbg = None
        if want_debug:
            settled = self.pruned | self.finalized.keys()
            never = [v for v in range(g.n) if v not in settled]
            dbg = SolverDebug(dict(self.finalized), sorted(self.pruned), never)
        return TopKResult(entries, kth, self.m_vis, self.n_pruned,
                          self.variant, self.measure, self.k, g.n, debug=dbg)

    def _pop_batch(self):
        batch = []
        while self.heap and len(batch) < self.threads:
            key, stamp, v = self.heap[0]
            if v in self.finalized or v in self.pruned or stamp != self.stamp[v]:
                heapq.heappop(self.heap)
                continue
            if self._beats_stop(key):
                if batch:
                    break  # score what we have; the stop re-fires next round
                return []
            heapq.heappop(self.heap)
            batch.append(v)
        return batch
