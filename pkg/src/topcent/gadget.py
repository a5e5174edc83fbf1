"""Generator for the set-disjointness stress graphs.

A collection of subsets is compiled into a digraph whose most closeness
central vertex encodes whether two disjoint member sets exist: every set
vertex reaches a fixed audience (fan-out blocks Y and Z, the element copies)
plus one chain of tail copies per set it intersects, so its closeness is a
strictly decreasing function of how many sets it intersects. These graphs
make good adversarial fixtures for the solver because the ranking hinges on
exact tie handling near the closed-form scores.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .graph import Graph
from .scores import cmp_pairs
from .solver import topk

DEFAULT_P = 7
DEFAULT_Q = 36


@dataclass
class TdsInstance:
    """Ground set plus a collection of its subsets."""
    ground_set: list
    sets: list[frozenset]

    @classmethod
    def of(cls, ground_set, sets) -> "TdsInstance":
        return cls(list(ground_set), [frozenset(s) for s in sets])


@dataclass
class GadgetGraph:
    graph: Graph
    roles: list[str]          # per node id: Z, Y, C0, X1, X2, C1..Cp
    p: int
    q: int
    set_vertices: list[int]   # node id of each collection member's C0 copy

    def role_lines(self) -> str:
        return "\n".join(f"{self.graph.labels[v]} {self.roles[v]}"
                         for v in range(self.graph.n)) + "\n"

    def save(self, path: str | Path) -> tuple[Path, Path]:
        """Write the edge list to ``path`` and roles to ``path`` + '.roles'."""
        path = Path(path)
        path.write_text(self.graph.to_edge_list())
        role_path = path.with_name(path.name + ".roles")
        role_path.write_text(self.role_lines())
        return path, role_path


def intersect_counts(inst: TdsInstance) -> list[int]:
    """For each member set, the number of members it intersects (itself included)."""
    return [sum(1 for other in inst.sets if s & other) for s in inst.sets]


def brute_two_disjoint_sets(inst: TdsInstance) -> bool:
    """Pairwise oracle: does any pair of members have empty intersection?"""
    sets = inst.sets
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if not (sets[i] & sets[j]):
                return True
    return False


def tail_weight(p: int) -> int:
    """Total distance of one chain of tail copies seen from a set vertex:
    copy i sits at distance i+1, so sum(i+1 for i in 1..p)."""
    return (p + 1) * (p + 2) // 2 - 1


def closeness_pair(inst: TdsInstance, rc: int, p: int = DEFAULT_P,
                   q: int = DEFAULT_Q) -> tuple[int, int]:
    """Closed-form (sum_dist, reach) of a set vertex intersecting rc members."""
    nc, nx = len(inst.sets), len(inst.ground_set)
    s = q * (1 + 2 * nc) + nx + tail_weight(p) * rc
    r = q * (1 + nc) + nx + p * rc + 1
    return s, r


def build_gadget(inst: TdsInstance, p: int = DEFAULT_P, q: int = DEFAULT_Q) -> GadgetGraph:
    """Directed gadget over Z, Y, C0, X1, X2 and p chained copies of the sets.

    Arcs: each set vertex reaches all q fan nodes Y (each with its own
    private Z children), its members' X1 copies and its non-members' X2
    copies; an X1 element feeds the first chain copy of every set containing
    it, and chain copies link forward.
    """
    if p < 1 or q < 1:
        raise ValueError("p and q must be >= 1")
    nc, nx = len(inst.sets), len(inst.ground_set)
    if nc == 0:
        raise ValueError("empty collection")
    elem_idx = {x: i for i, x in enumerate(inst.ground_set)}
    for s in inst.sets:
        if not s <= set(inst.ground_set):
            raise ValueError("set member outside the ground set")

    labels: list[str] = []
    roles: list[str] = []

    def block(role, count, tag):
        start = len(labels)
        for i in range(count):
            labels.append(f"{tag}{i}")
            roles.append(role)
        return start

    z0 = block("Z", q * nc, "Z")
    y0 = block("Y", q, "Y")
    c0 = block("C0", nc, "S")
    x1 = block("X1", nx, "A")
    x2 = block("X2", nx, "B")
    chain0 = [block(f"C{i}", nc, f"T{i}_") for i in range(1, p + 1)]

    edges: list[tuple[int, int]] = []
    for j in range(q):
        y = y0 + j
        for t in range(nc):
            edges.append((y, z0 + j * nc + t))
    for s in range(nc):
        v = c0 + s
        for j in range(q):
            edges.append((v, y0 + j))
        members = inst.sets[s]
        for x in inst.ground_set:
            xi = elem_idx[x]
            if x in members:
                edges.append((v, x1 + xi))
            else:
                edges.append((v, x2 + xi))
    for x in inst.ground_set:
        xi = elem_idx[x]
        for s in range(nc):
            if x in inst.sets[s]:
                edges.append((x1 + xi, chain0[0] + s))
    for i in range(p - 1):
        for s in range(nc):
            edges.append((chain0[i] + s, chain0[i + 1] + s))

    g = Graph.from_edges(edges, directed=True, n=len(labels), labels=labels)
    return GadgetGraph(g, roles, p, q, [c0 + s for s in range(nc)])


def decide_via_centrality(inst: TdsInstance, p: int = DEFAULT_P,
                          q: int = DEFAULT_Q, variant: str = "auto") -> bool:
    """True iff two disjoint member sets exist.

    Builds the gadget, finds the most closeness-central vertex, and compares
    its exact score pair against the closed form for a set intersecting the
    whole collection; any difference certifies a disjoint pair. Degenerate
    instances outside the regime where the closed form is provably monotone
    (fewer than two sets, empty ground set, or more elements than sets) fall
    back to the pairwise oracle.
    """
    nc, nx = len(inst.sets), len(inst.ground_set)
    if nc < 2 or nx == 0 or nx > nc:
        return brute_two_disjoint_sets(inst)
    gg = build_gadget(inst, p, q)
    res = topk(gg.graph, 1, variant=variant, measure="closeness")
    winner = res.entries[0].farness
    expected = closeness_pair(inst, nc, p, q)
    return cmp_pairs(winner, expected) != 0
