"""Early-terminating BFS: abort scoring a node once a running farness lower
bound certifies it cannot beat the current k-th best."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .backend import kernels
from .graph import Graph
from .reach import ReachInfo
from .scores import HARMONIC_TOL


@dataclass
class CutResult:
    pruned: bool
    visited_arcs: int
    # closeness: exact pair on completion
    sum_dist: int | None = None
    reach: int | None = None
    # harmonic: exact score on completion
    harmonic: float | None = None
    # instrumentation: raw per-level bound state, index = completed level
    level_s_lo: np.ndarray | None = None
    level_s_hi: np.ndarray | None = None
    level_h_ub: np.ndarray | None = None
    r_lo: int = 0
    r_hi: int = 0


def _base_array(g: Graph) -> np.ndarray:
    # next-level size estimate per discovered node: out-degree, or degree-1
    # undirected (one edge must point back toward the search root)
    deg = g.out_degrees().astype(np.int64)
    return deg if g.directed else np.maximum(deg - 1, 0)


def bfs_cut(g: Graph, v: int, reach: ReachInfo,
            threshold: tuple[int, int] | float | None = None,
            measure: str = "closeness") -> CutResult:
    """Score node ``v`` exactly, or return early with ``pruned=True``.

    ``threshold`` is the current k-th best: a farness pair (sum, reach) or a
    plain float farness for closeness, a float score for harmonic, or None to
    disable pruning. Pruning requires the running bound to be strictly worse
    than the threshold, so nodes tying the k-th value always complete.
    """
    if not 0 <= v < g.n:
        raise ValueError(f"node {v} outside [0, {g.n})")
    deg_v = int(g.indptr[v + 1] - g.indptr[v])
    r_hi = int(reach.hi[v])
    if deg_v == 0 or r_hi <= 1:
        if measure == "harmonic":
            return CutResult(False, 0, harmonic=0.0)
        return CutResult(False, 0, sum_dist=0, reach=1)
    base = _base_array(g)
    if measure == "closeness":
        r_lo = int(reach.lo[v])
        has_xp = isinstance(threshold, tuple)
        xs, xr = (int(threshold[0]), int(threshold[1])) if has_xp else (0, 0)
        has_xf = isinstance(threshold, float)
        xf = float(threshold) if has_xf else 0.0
        pruned, s, r, arcs, nlev, lvl_lo, lvl_hi = kernels.bfs_cut_closeness(
            g.indptr, g.indices, base, g.n, v, r_lo, r_hi,
            has_xp, xs, xr, has_xf, xf, not g.directed)
        res = CutResult(bool(pruned), int(arcs),
                        level_s_lo=np.asarray(lvl_lo[1:nlev + 1]),
                        level_s_hi=np.asarray(lvl_hi[1:nlev + 1]),
                        r_lo=r_lo, r_hi=r_hi)
        if not pruned:
            res.sum_dist, res.reach = int(s), int(r)
        return res
    if measure == "harmonic":
        has_x = threshold is not None
        x = float(threshold) if has_x else 0.0
        pruned, h, r, arcs, nlev, lvl_ub = kernels.bfs_cut_harmonic(
            g.indptr, g.indices, base, g.n, v, r_hi,
            has_x, x, HARMONIC_TOL, not g.directed)
        res = CutResult(bool(pruned), int(arcs),
                        level_h_ub=np.asarray(lvl_ub[1:nlev + 1]), r_hi=r_hi)
        if not pruned:
            res.harmonic, res.reach = float(h), int(r)
        return res
    raise ValueError(f"unknown measure {measure!r}")
