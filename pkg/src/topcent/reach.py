"""Per-node reachable-set counts: exact where cheap, intervals otherwise.

Undirected graphs get exact counts from connected components, strongly
connected digraphs trivially reach everything, and general digraphs get
per-node intervals [lo, hi] from dynamic programming over the condensation
of strongly connected components.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .graph import Graph

MODE_UNDIRECTED = "undirected-exact"
MODE_STRONG = "strongly-connected-exact"
MODE_INTERVAL = "directed-interval"


@dataclass
class SccDag:
    """Condensation of a digraph: one weighted node per SCC, arcs deduplicated."""
    comp_of: np.ndarray            # node -> SCC id
    weights: np.ndarray            # SCC id -> member count
    dag_adjacency: list[list[int]]
    topo_order: list[int]
    biggest: int                   # heaviest SCC, smallest id on ties

    @property
    def num_components(self) -> int:
        return len(self.weights)


@dataclass
class ReachInfo:
    """Reach counts r(v), exact or bracketed by lo <= r(v) <= hi."""
    mode: str
    lo: np.ndarray
    hi: np.ndarray
    exact: np.ndarray | None = None
    dag: SccDag | None = field(default=None, repr=False)

    def is_exact(self) -> bool:
        return self.exact is not None


def _as_csgraph(g: Graph) -> csr_matrix:
    data = np.ones(len(g.indices), dtype=np.int8)
    return csr_matrix((data, g.indices, g.indptr), shape=(g.n, g.n))


def exact_reach_undirected(g: Graph) -> ReachInfo:
    """r(v) = size of v's connected component."""
    if g.directed:
        raise ValueError("exact_reach_undirected requires an undirected graph")
    _, labels = connected_components(_as_csgraph(g), directed=False)
    sizes = np.bincount(labels)
    r = sizes[labels].astype(np.int64)
    return ReachInfo(MODE_UNDIRECTED, r, r, exact=r)


def scc_condensation(g: Graph) -> SccDag:
    if not g.directed:
        raise ValueError("scc_condensation requires a directed graph")
    ncomp, labels = connected_components(_as_csgraph(g), directed=True,
                                         connection="strong")
    labels = labels.astype(np.int64)
    weights = np.bincount(labels, minlength=ncomp).astype(np.int64)
    src = np.repeat(np.arange(g.n, dtype=np.int64), np.diff(g.indptr))
    cu, cv = labels[src], labels[g.indices]
    cross = cu != cv
    adj: list[list[int]] = [[] for _ in range(ncomp)]
    if cross.any():
        keys = np.unique(cu[cross] * np.int64(ncomp) + cv[cross])
        for key in keys:
            adj[int(key // ncomp)].append(int(key % ncomp))
    topo = _topological_order(adj, ncomp)
    biggest = int(np.argmax(weights))
    return SccDag(labels, weights, adj, topo, biggest)


def _topological_order(adj: list[list[int]], ncomp: int) -> list[int]:
    indeg = [0] * ncomp
    for u in range(ncomp):
        for v in adj[u]:
            indeg[v] += 1
    queue = deque(c for c in range(ncomp) if indeg[c] == 0)
    order = []
    while queue:
        u = queue.popleft()
        order.append(u)
        for v in adj[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    if len(order) != ncomp:
        raise AssertionError("condensation is not acyclic")
    return order


def _dag_reachable_weight(dag: SccDag, start: int) -> tuple[int, np.ndarray]:
    """Total node weight reachable from SCC ``start`` plus the visited mask."""
    seen = np.zeros(dag.num_components, dtype=bool)
    seen[start] = True
    stack = [start]
    total = 0
    while stack:
        c = stack.pop()
        total += int(dag.weights[c])
        for d in dag.dag_adjacency[c]:
            if not seen[d]:
                seen[d] = True
                stack.append(d)
    return total, seen


def _dag_reaches_mask(dag: SccDag, target: int) -> np.ndarray:
    """SCCs that can reach ``target`` (including itself), via reversed arcs."""
    ncomp = dag.num_components
    radj: list[list[int]] = [[] for _ in range(ncomp)]
    for u in range(ncomp):
        for v in dag.dag_adjacency[u]:
            radj[v].append(u)
    seen = np.zeros(ncomp, dtype=bool)
    seen[target] = True
    stack = [target]
    while stack:
        c = stack.pop()
        for d in radj[c]:
            if not seen[d]:
                seen[d] = True
                stack.append(d)
    return seen


def reach_interval_bounds(dag: SccDag, biggest: int | None = None) -> ReachInfo:
    """Per-node reach intervals from the condensation.

    Sinks count only themselves. Every other SCC gets lo = weight + best
    successor lo, hi = weight + sum of successor hi, processed in reverse
    topological order. The heaviest SCC is resolved exactly by one DAG
    traversal, and SCCs that reach it may swap their hi for the refined
    route through that exact count when it is smaller. hi never exceeds the
    total node count. ``biggest`` overrides the heaviest-SCC choice, mainly
    for tests.
    """
    ncomp = dag.num_components
    n_total = int(dag.weights.sum())
    big = dag.biggest if biggest is None else int(biggest)
    lo_c = np.zeros(ncomp, np.int64)
    hi_c = np.zeros(ncomp, np.int64)
    exact_big, from_big = _dag_reachable_weight(dag, big)
    reaches_big = _dag_reaches_mask(dag, big)
    lo_c[big] = hi_c[big] = exact_big
    for c in reversed(dag.topo_order):
        if c == big:
            continue
        best_lo = 0
        total_hi = 0
        outside_hi = 0
        for d in dag.dag_adjacency[c]:
            if lo_c[d] > best_lo:
                best_lo = lo_c[d]
            total_hi += int(hi_c[d])
            if not from_big[d]:
                outside_hi += int(hi_c[d])
        w = int(dag.weights[c])
        lo_c[c] = w + best_lo
        hi = w + total_hi
        if reaches_big[c]:
            hi = min(hi, w + outside_hi + exact_big)
        hi_c[c] = min(hi, n_total)
    lo = lo_c[dag.comp_of]
    hi = hi_c[dag.comp_of]
    return ReachInfo(MODE_INTERVAL, lo, hi, exact=None, dag=dag)


def reach_info(g: Graph) -> ReachInfo:
    """Pick the strongest reach information the graph class allows."""
    if not g.directed:
        return exact_reach_undirected(g)
    dag = scc_condensation(g)
    if dag.num_components == 1:
        r = np.full(g.n, g.n, np.int64)
        return ReachInfo(MODE_STRONG, r, r, exact=r, dag=dag)
    return reach_interval_bounds(dag)
