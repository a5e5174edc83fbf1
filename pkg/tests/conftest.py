"""Shared fixtures: the deterministic graph corpus and independent oracles."""

from __future__ import annotations

from fractions import Fraction

import networkx as nx
import numpy as np
import pytest

import topcent as tc
from _corpus import corpus


@pytest.fixture(scope="session")
def full_corpus():
    return corpus(200)


@pytest.fixture(scope="session")
def small_corpus(full_corpus):
    return full_corpus[:60]


def to_networkx(g: tc.Graph):
    G = nx.DiGraph() if g.directed else nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from((int(u), int(v)) for u, v in g.edge_id_pairs())
    return G


def nx_distance_rows(g: tc.Graph):
    """Per-source shortest-path dicts from networkx; the independent oracle."""
    G = to_networkx(g)
    return [nx.single_source_shortest_path_length(G, v) for v in range(g.n)]


def nx_closeness_pairs(g: tc.Graph):
    rows = nx_distance_rows(g)
    return [(sum(d.values()), len(d)) for d in rows]


def farness_fraction(pair) -> Fraction:
    s, r = pair
    if r <= 1:
        return Fraction(1, 1) * 10 ** 18  # effectively infinite
    return Fraction(int(s), (int(r) - 1) ** 2)


def farness_leq(a, b) -> bool:
    """a <= b over farness pairs without Fraction overhead."""
    ia, ib = a[1] <= 1, b[1] <= 1
    if ia or ib:
        return ib or not ia
    return int(a[0]) * (int(b[1]) - 1) ** 2 <= int(b[0]) * (int(a[1]) - 1) ** 2


def count_recurrence_rows(g):
    """Independent per-level count estimates for directed graphs (capped)."""
    cap = g.n
    cur = [int(d) for d in g.out_degrees()]
    rows = [[] for _ in range(g.n)]
    for _ in range(g.n + 1):
        for v in range(g.n):
            rows[v].append(cur[v])
        cur = [min(cap, sum(cur[int(w)] for w in g.neighbors(v)))
               for v in range(g.n)]
    return rows


def brute_reach_min(gammas, lo, hi) -> Fraction:
    """Minimum farness-style bound over every reach value in [lo, hi]."""
    best = None
    for r in range(max(lo, 2), hi + 1):
        s = 0
        cum = 1
        for k, gk in enumerate(gammas, start=1):
            s += k * min(gk, max(r - cum, 0))
            cum += gk
        val = Fraction(s, (r - 1) ** 2)
        if best is None or val < best:
            best = val
    return best


def entry_view(result):
    return [(e.rank, e.label, e.farness) for e in result.entries]


def harmonic_view(result):
    return [(e.rank, e.label) for e in result.entries], \
        np.array([e.score for e in result.entries])


ACCEPTANCE_LABELS = {
    "test_c1": "1 oracle equivalence",
    "test_c2": "2 tree exactness",
    "test_c3": "3 bound soundness",
    "test_c4": "4 candidate-set minimum equivalence",
    "test_c5": "5 level-bound recurrence",
    "test_c6": "6 pruning effectiveness at scale",
    "test_c7": "7 gadget suite",
    "test_c8": "8 determinism and parallel consistency",
}

_acceptance_outcomes: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        name = report.nodeid.split("::")[-1]
        key = name.split("_", 2)
        key = f"test_{key[1]}" if len(key) > 1 else name
        _acceptance_outcomes[key] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_outcomes:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for key, label in ACCEPTANCE_LABELS.items():
        outcome = _acceptance_outcomes.get(key)
        status = {"passed": "PASS", "failed": "FAIL"}.get(outcome, "NOT RUN")
        terminalreporter.write_line(f"  criterion {label}: {status}")
