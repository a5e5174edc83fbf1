import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import topcent as tc
from conftest import to_networkx

import networkx as nx


def test_parse_simple_undirected():
    g = tc.parse_edge_list("0 1\n1 2", directed=False)
    assert g.n == 3 and g.m == 2 and not g.directed


def test_parse_comments_and_duplicate_arcs():
    g = tc.parse_edge_list("a b\n# c\nb a", directed=True)
    assert g.n == 2 and g.m == 2
    assert set(g.neighbors(g.node_id("a")).tolist()) == {g.node_id("b")}


def test_parse_self_loop_dropped_but_label_kept():
    g = tc.parse_edge_list("x x\nx y", directed=False)
    assert g.n == 2 and g.m == 1


def test_parse_percent_comments_crlf_extra_tokens():
    text = "% header\r\na b 3.5 extra\r\n\r\nb c 1\r\n"
    g = tc.parse_edge_list(text)
    assert g.n == 3 and g.m == 2


def test_parse_accepts_bytes_and_file_objects():
    assert tc.parse_edge_list(b"a b\n").n == 2
    assert tc.parse_edge_list(io.StringIO("a b\n")).n == 2
    assert tc.parse_edge_list(io.BytesIO(b"a b\n")).n == 2


def test_parse_malformed_line_reports_number():
    with pytest.raises(tc.EdgeListParseError) as exc:
        tc.parse_edge_list("a b\nc\n")
    assert exc.value.line_no == 2
    assert "line 2" in str(exc.value)


def test_parse_empty_graph_rejected():
    with pytest.raises(tc.EdgeListParseError):
        tc.parse_edge_list("# only comments\n")


def test_graph_invariants_after_construction():
    g = tc.parse_edge_list("a b\nb a\na a\nb c\nc b\n", directed=False)
    assert g.n == 3 and g.m == 2
    deg = g.out_degrees()
    for v in range(g.n):
        nbrs = g.neighbors(v)
        assert ((nbrs >= 0) & (nbrs < g.n)).all()
        assert v not in nbrs
        assert len(set(nbrs.tolist())) == len(nbrs)
        for w in nbrs:
            assert v in g.neighbors(int(w))
    assert int(deg.sum()) == 2 * g.m


def test_from_edges_validation():
    with pytest.raises(ValueError):
        tc.Graph.from_edges([], directed=False)
    with pytest.raises(ValueError):
        tc.Graph.from_edges([(0, 5)], n=3)
    g = tc.Graph.from_edges([], n=4)
    assert g.n == 4 and g.m == 0


def test_bfs_path():
    g = tc.parse_edge_list("a b\nb c")
    res = tc.bfs(g, 0)
    assert res.dist.tolist() == [0, 1, 2]
    assert res.reached == 3
    assert res.level_counts.tolist() == [1, 1, 1]
    assert res.order.tolist() == [0, 1, 2]


def test_bfs_directed_unreached():
    g = tc.parse_edge_list("u v", directed=True)
    res = tc.bfs(g, g.node_id("v"))
    assert res.reached == 1
    assert res.dist[g.node_id("u")] == tc.UNREACHED


def test_bfs_four_cycle_levels():
    g = tc.Graph.from_edges([(0, 1), (1, 2), (2, 3), (3, 0)])
    for v in range(4):
        res = tc.bfs(g, v)
        assert res.level_counts.tolist() == [1, 2, 1]


def test_bfs_source_out_of_range():
    g = tc.parse_edge_list("a b")
    with pytest.raises(ValueError):
        tc.bfs(g, 9)


def test_bfs_relaxation_and_arc_count(small_corpus):
    for g in small_corpus[:12]:
        res = tc.bfs(g, 0)
        deg = g.out_degrees()
        reached = np.flatnonzero(res.dist >= 0)
        assert res.visited_arcs == int(deg[reached].sum())
        assert res.level_counts.sum() == res.reached
        for u in reached:
            for w in g.neighbors(int(u)):
                assert res.dist[w] != tc.UNREACHED
                assert res.dist[w] <= res.dist[u] + 1


def test_bfs_matches_component(small_corpus):
    for g in small_corpus[:10]:
        if g.directed:
            continue
        G = to_networkx(g)
        comp = nx.node_connected_component(G, 0)
        res = tc.bfs(g, 0)
        assert set(np.flatnonzero(res.dist >= 0).tolist()) == comp


def test_bfs_callback_truncation():
    g = tc.Graph.from_edges([(i, i + 1) for i in range(5)])  # path of 6
    seen = []

    def cb(d, snap):
        seen.append((d, snap.level_count))
        return d < 2  # returning False at d=2 stops

    res = tc.bfs(g, 0, on_level_complete=cb)
    assert res.truncated
    assert seen[-1][0] == 2
    full = tc.bfs(g, 0)
    mask = res.dist >= 0
    assert (res.dist[mask] == full.dist[mask]).all()
    assert (res.dist[full.dist <= 2] >= 0).all()


def test_degree_order_star_path_directed():
    star = tc.parse_edge_list("c a\nc b\nc d")
    order = tc.degree_descending_order(star)
    assert order[0] == star.node_id("c")
    path = tc.parse_edge_list("a b\nb c")
    assert [path.labels[i] for i in tc.degree_descending_order(path)] == ["b", "a", "c"]
    duo = tc.parse_edge_list("u v", directed=True)
    assert [duo.labels[i] for i in tc.degree_descending_order(duo)] == ["u", "v"]


def _label_edge_set(g):
    pairs = set()
    for u, v in g.edge_id_pairs():
        a, b = g.labels[u], g.labels[v]
        pairs.add((a, b) if g.directed else tuple(sorted((a, b))))
    return pairs


@settings(max_examples=60, deadline=None)
@given(
    edges=st.lists(st.tuples(st.integers(0, 12), st.integers(0, 12)), min_size=1, max_size=40),
    directed=st.booleans(),
)
def test_roundtrip_serialization(edges, directed):
    text = "\n".join(f"n{u} n{v}" for u, v in edges)
    g = tc.parse_edge_list(text, directed=directed)
    g2 = tc.parse_edge_list(g.to_edge_list(), directed=directed)
    assert g2.n == g.n
    assert g2.m == g.m
    assert set(g2.labels) == set(g.labels)
    assert _label_edge_set(g2) == _label_edge_set(g)


def test_in_csr_directed_only():
    g = tc.parse_edge_list("a b\nc b", directed=True)
    indptr, indices = g.in_csr()
    b = g.node_id("b")
    assert sorted(indices[indptr[b]:indptr[b + 1]].tolist()) == \
        sorted([g.node_id("a"), g.node_id("c")])
    with pytest.raises(ValueError):
        tc.parse_edge_list("a b").in_csr()
