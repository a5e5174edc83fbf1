"""Immutable unweighted graphs over dense integer ids with CSR adjacency.

External node tokens (arbitrary strings) are remapped to dense ids in
first-appearance order; the label map is kept for output. Self-loops are
dropped and parallel arcs deduplicated, so every graph here is simple.
"""

from __future__ import annotations

import io
from typing import IO, Iterable, Sequence

import numpy as np

UNREACHED = -1


class EdgeListParseError(ValueError):
    """Raised for malformed edge-list input; carries the 1-based line number."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class Graph:
    """Unweighted graph, directed or undirected, frozen after construction.

    Adjacency is CSR over int64 arrays (``indptr``, ``indices``) with rows in
    ascending neighbor order. ``m`` counts arcs if directed, undirected edges
    once otherwise. Instances are safe to share across threads.
    """

    __slots__ = ("n", "m", "directed", "indptr", "indices", "labels",
                 "_label_ids", "_in_indptr", "_in_indices", "_out_deg")

    def __init__(self, n: int, directed: bool, indptr: np.ndarray,
                 indices: np.ndarray, labels: list[str]):
        self.n = int(n)
        self.m = 0  # set by builders
        self.directed = bool(directed)
        self.indptr = indptr
        self.indices = indices
        self.labels = labels
        self._label_ids = {lab: i for i, lab in enumerate(labels)}
        self._in_indptr = None
        self._in_indices = None
        self._out_deg = None

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], directed: bool = False,
                   n: int | None = None, labels: Sequence[str] | None = None) -> "Graph":
        """Build a graph from integer id pairs; loops dropped, arcs deduplicated."""
        pairs = np.asarray(list(edges), dtype=np.int64)
        if pairs.size == 0:
            pairs = pairs.reshape(0, 2)
        if n is None:
            if pairs.shape[0] == 0:
                raise ValueError("cannot infer node count from an empty edge set")
            n = int(pairs.max()) + 1
        n = int(n)
        if n <= 0:
            raise ValueError("graph must have at least one node")
        if pairs.shape[0] and (pairs.min() < 0 or pairs.max() >= n):
            raise ValueError("edge endpoint outside [0, n)")
        if labels is None:
            labels = [str(i) for i in range(n)]
        elif len(labels) != n:
            raise ValueError("labels length must equal node count")
        return _build(n, pairs, directed, list(labels))

    def node_id(self, label: str) -> int:
        return self._label_ids[label]

    def out_degrees(self) -> np.ndarray:
        if self._out_deg is None:
            self._out_deg = np.diff(self.indptr)
        return self._out_deg

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def in_csr(self) -> tuple[np.ndarray, np.ndarray]:
        """CSR of reversed arcs; built on first use. Directed graphs only."""
        if not self.directed:
            raise ValueError("in-adjacency is only distinct for directed graphs")
        if self._in_indptr is None:
            src = np.repeat(np.arange(self.n, dtype=np.int64), np.diff(self.indptr))
            order = np.lexsort((src, self.indices))
            counts = np.bincount(self.indices, minlength=self.n)
            indptr = np.zeros(self.n + 1, dtype=np.int64)
            np.cumsum(counts, out=indptr[1:])
            self._in_indptr = indptr
            self._in_indices = src[order]
        return self._in_indptr, self._in_indices

    def edge_id_pairs(self) -> np.ndarray:
        """(m, 2) array of arcs; undirected edges appear once as (min, max)."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), np.diff(self.indptr))
        pairs = np.stack([src, self.indices], axis=1)
        if not self.directed:
            pairs = pairs[pairs[:, 0] < pairs[:, 1]]
        return pairs

    def to_edge_list(self) -> str:
        """Serialize back to edge-list text.

        Isolated nodes are written as self-loop lines so they survive a
        round-trip (the parser registers the label, then drops the loop).
        """
        out = []
        seen = np.zeros(self.n, dtype=bool)
        for u, v in self.edge_id_pairs():
            out.append(f"{self.labels[u]} {self.labels[v]}")
            seen[u] = seen[v] = True
        for v in np.flatnonzero(~seen):
            out.append(f"{self.labels[v]} {self.labels[v]}")
        return "\n".join(out) + "\n"

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"Graph(n={self.n}, m={self.m}, {kind})"


def _build(n: int, pairs: np.ndarray, directed: bool, labels: list[str]) -> Graph:
    pairs = pairs[pairs[:, 0] != pairs[:, 1]]  # no self-loops
    if directed:
        arcs = pairs
    else:
        lo = np.minimum(pairs[:, 0], pairs[:, 1])
        hi = np.maximum(pairs[:, 0], pairs[:, 1])
        arcs = np.stack([lo, hi], axis=1)
    if arcs.shape[0]:
        keys = arcs[:, 0] * np.int64(n) + arcs[:, 1]
        keys = np.unique(keys)
        arcs = np.stack([keys // n, keys % n], axis=1)
    m = arcs.shape[0]
    if not directed and m:
        arcs = np.concatenate([arcs, arcs[:, ::-1]], axis=0)
    src, dst = (arcs[:, 0], arcs[:, 1]) if arcs.shape[0] else \
        (np.empty(0, np.int64), np.empty(0, np.int64))
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    g = Graph(n, directed, indptr, dst.astype(np.int64), labels)
    g.m = int(m)
    return g


def parse_edge_list(source: str | bytes | IO, directed: bool = False) -> Graph:
    """Parse whitespace-separated edge-list text into a Graph.

    Lines starting with '#' or '%' are comments; blank lines are skipped. Each
    remaining line must hold at least two tokens (extra tokens are ignored).
    Tokens become labels, assigned dense ids in first-appearance order.
    """
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:
        text = source.read()
        if isinstance(text, bytes):
            text = text.decode("utf-8")

    ids: dict[str, int] = {}
    labels: list[str] = []
    edges: list[tuple[int, int]] = []

    def intern(tok: str) -> int:
        i = ids.get(tok)
        if i is None:
            i = len(labels)
            ids[tok] = i
            labels.append(tok)
        return i

    for line_no, raw in enumerate(io.StringIO(text), start=1):
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        toks = line.split()
        if len(toks) < 2:
            raise EdgeListParseError("expected at least 2 tokens", line_no)
        edges.append((intern(toks[0]), intern(toks[1])))

    if not labels:
        raise EdgeListParseError("no edges found; empty graph")
    pairs = np.asarray(edges, dtype=np.int64)
    return _build(len(labels), pairs, directed, labels)


def degree_descending_order(g: Graph) -> np.ndarray:
    """Node ids sorted by (out-)degree, largest first; ties by ascending id."""
    deg = g.out_degrees()
    return np.lexsort((np.arange(g.n), -deg)).astype(np.int64)
