"""Single-source BFS with level instrumentation and optional early stop."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .backend import kernels
from .graph import Graph, UNREACHED


@dataclass(frozen=True)
class LevelSnapshot:
    """State handed to the per-level callback after level ``depth`` completes."""
    depth: int
    level_count: int
    reached: int
    visited_arcs: int


@dataclass
class BfsResult:
    source: int
    dist: np.ndarray          # -1 (UNREACHED) where not reached
    order: np.ndarray         # visit sequence, length == reached
    level_counts: np.ndarray  # counts per distance, index 0 is the source
    reached: int
    visited_arcs: int
    truncated: bool = False


def bfs(g: Graph, source: int,
        on_level_complete: Callable[[int, LevelSnapshot], object] | None = None) -> BfsResult:
    """Breadth-first search from ``source``.

    ``on_level_complete(d, snapshot)`` runs after each level d finishes; a
    return value of exactly False stops the traversal, marking the result
    truncated (distances stay exact for levels <= d).
    """
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} outside [0, {g.n})")
    if on_level_complete is None:
        dist, order, reached, arcs = kernels.bfs(g.indptr, g.indices, g.n, source)
        counts = np.bincount(dist[dist >= 0])
        return BfsResult(source, dist, order[:reached].copy(), counts,
                         int(reached), int(arcs))
    return _bfs_with_callback(g, source, on_level_complete)


def _bfs_with_callback(g, source, cb):
    dist = np.full(g.n, UNREACHED, np.int64)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    order = [frontier]
    counts = [1]
    reached = 1
    arcs = 0
    d = 0
    truncated = False
    while frontier.size:
        starts = g.indptr[frontier]
        stops = g.indptr[frontier + 1]
        arcs += int((stops - starts).sum())
        targets = np.concatenate(
            [g.indices[a:b] for a, b in zip(starts, stops)] or [np.empty(0, np.int64)])
        fresh = targets[dist[targets] < 0] if targets.size else targets
        if fresh.size:
            _, first = np.unique(fresh, return_index=True)
            new = fresh[np.sort(first)]
        else:
            new = fresh
        dist[new] = d + 1
        reached += new.size
        snap = LevelSnapshot(d, int(frontier.size), reached, arcs)
        if cb(d, snap) is False:
            truncated = True
            if new.size:
                order.append(new)
                counts.append(int(new.size))
            break
        if new.size:
            order.append(new)
            counts.append(int(new.size))
        frontier = new
        d += 1
    return BfsResult(source, dist, np.concatenate(order),
                     np.asarray(counts, dtype=np.int64), reached, arcs, truncated)
