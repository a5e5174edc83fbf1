"""Exact closeness score arithmetic and ranked result assembly.

Closeness scores are carried as integer pairs (s, r): total distance and
reach count, meaning score (r-1)^2 / ((n-1) s) and farness (n-1) s / (r-1)^2.
Pairs with r <= 1 stand for score 0 / infinite farness. All comparisons
cross-multiply in Python ints, so ties are detected exactly; floats appear
only for display. Harmonic scores are plain floats with a 1e-9 tie tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

HARMONIC_TOL = 1e-9

INF_PAIR = (0, 1)
ZERO_PAIR = (0, 2)


def pair_is_infinite(p: tuple[int, int]) -> bool:
    return p[1] <= 1


def cmp_pairs(a: tuple[int, int], b: tuple[int, int]) -> int:
    """Order two farness pairs: -1 / 0 / 1 for less / equal / greater."""
    ia, ib = a[1] <= 1, b[1] <= 1
    if ia or ib:
        return int(ia) - int(ib)
    lhs = a[0] * (b[1] - 1) ** 2
    rhs = b[0] * (a[1] - 1) ** 2
    return (lhs > rhs) - (lhs < rhs)


def compare_farness(a: tuple[int, int], b: tuple[int, int], n: int) -> int:
    """Compare (n-1)*S/(r-1)^2 farness values exactly; r < 2 counts as infinite.

    The shared (n-1) factor cancels, so n only documents the convention.
    Returns -1, 0 or 1.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return cmp_pairs(a, b)


def pair_score(p: tuple[int, int], n: int) -> float:
    """Closeness value of a farness pair, 0.0 for unreachable-or-sink nodes."""
    s, r = p
    if r <= 1 or s <= 0:
        return 0.0
    return (r - 1) ** 2 / ((n - 1) * s)


@dataclass
class TopKEntry:
    rank: int
    label: str
    node: int
    score: float
    farness: tuple[int, int] | None  # None for harmonic


@dataclass
class TopKResult:
    """Tie-inclusive top-k answer plus pruning instrumentation."""
    entries: list[TopKEntry]
    kth_value: float
    m_vis: int
    n_pruned: int
    variant: str
    measure: str
    k: int
    n: int
    debug: object | None = field(default=None, repr=False)

    def labels(self) -> list[str]:
        return [e.label for e in self.entries]


def assemble_closeness(finalized: dict[int, tuple[int, int]], labels, n: int,
                       k: int) -> tuple[list[TopKEntry], float]:
    """Entries with farness <= the k-th smallest; tied groups label-sorted."""
    items = sorted(finalized.items(), key=lambda kv: _CmpKey(kv[1], labels[kv[0]]))
    if len(items) > k:
        cutoff = items[k - 1][1]
        items = [it for it in items if cmp_pairs(it[1], cutoff) <= 0]
    groups = _tie_groups(items, lambda a, b: cmp_pairs(a[1], b[1]) == 0)
    entries = _rank_groups(groups, labels, n, closeness=True)
    kth = entries[min(k, len(entries)) - 1].score if entries else 0.0
    return entries, kth


def assemble_harmonic(finalized: dict[int, float], labels, n: int,
                      k: int) -> tuple[list[TopKEntry], float]:
    items = sorted(finalized.items(), key=lambda kv: (-kv[1], labels[kv[0]]))
    if len(items) > k:
        cutoff = items[k - 1][1]
        items = [it for it in items if it[1] >= cutoff - HARMONIC_TOL]
    groups = _tie_groups(items, lambda a, b: abs(a[1] - b[1]) <= HARMONIC_TOL)
    entries = _rank_groups(groups, labels, n, closeness=False)
    kth = entries[min(k, len(entries)) - 1].score if entries else 0.0
    return entries, kth


def _tie_groups(items, same):
    """Split a score-sorted list into runs of tied items (consecutive gaps)."""
    groups: list[list] = []
    for it in items:
        if groups and same(groups[-1][-1], it):
            groups[-1].append(it)
        else:
            groups.append([it])
    return groups


def _rank_groups(groups, labels, n, closeness):
    entries = []
    pos = 1
    for group in groups:
        group.sort(key=lambda it: labels[it[0]])
        for node, val in group:
            if closeness:
                entries.append(TopKEntry(pos, labels[node], node,
                                         pair_score(val, n), val))
            else:
                entries.append(TopKEntry(pos, labels[node], node, float(val), None))
        pos += len(group)
    return entries


class _CmpKey:
    __slots__ = ("pair", "label")

    def __init__(self, pair, label):
        self.pair = pair
        self.label = label

    def __lt__(self, other):
        c = cmp_pairs(self.pair, other.pair)
        if c:
            return c < 0
        return self.label < other.label
