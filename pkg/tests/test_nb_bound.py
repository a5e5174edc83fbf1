import numpy as np
import pytest

import topcent as tc
from conftest import farness_fraction


def _random_tree(rng, n):
    return tc.Graph.from_edges([(int(rng.integers(0, v)), v) for v in range(1, n)], n=n)


def _tree_diameter(g):
    far = tc.bfs(g, 0)
    u = int(far.order[-1])
    return int(tc.bfs(g, u).dist.max())


def test_tree_path_and_star():
    p3 = tc.parse_edge_list("a b\nb c")
    t = tc.tree_closeness(p3)
    assert t.sum_dist.tolist() == [3, 2, 3]
    assert abs(t.value[0] - 2 / 3) < 1e-15 and t.value[1] == 1.0
    star = tc.Graph.from_edges([(0, i) for i in range(1, 5)], n=5)
    ts = tc.tree_closeness(star)
    assert ts.value[0] == 1.0
    assert abs(ts.value[1] - 4 / 7) < 1e-15
    edge = tc.parse_edge_list("a b")
    te = tc.tree_closeness(edge)
    assert te.value.tolist() == [1.0, 1.0]


def test_tree_rejects_non_trees():
    cyc = tc.Graph.from_edges([(0, 1), (1, 2), (2, 0)], n=3)
    with pytest.raises(ValueError):
        tc.tree_closeness(cyc)
    forest = tc.Graph.from_edges([(0, 1), (2, 3)], n=5)
    with pytest.raises(ValueError):
        tc.tree_closeness(forest)
    directed = tc.Graph.from_edges([(0, 1)], directed=True, n=2)
    with pytest.raises(ValueError):
        tc.tree_closeness(directed)


def test_tree_matches_oracle_and_level_budget():
    rng = np.random.default_rng(31)
    for _ in range(12):
        n = int(rng.integers(2, 400))
        g = _random_tree(rng, n)
        tree = tc.tree_closeness(g)
        ref = tc.closeness_all(g)
        assert (tree.sum_dist == ref.sum_dist).all()
        assert np.array_equal(tree.value, ref.value)
        assert tree.levels_used <= _tree_diameter(g) + 1


def test_nb_exact_on_trees_equals_farness():
    rng = np.random.default_rng(5)
    for _ in range(10):
        n = int(rng.integers(2, 150))
        g = _random_tree(rng, n)
        nb = tc.neighborhood_lower_bounds(g, tc.reach_info(g))
        ref = tc.closeness_all(g)
        for v in range(n):
            assert nb.pairs[v] == (int(ref.sum_dist[v]), int(ref.reached[v]))


def test_nb_four_cycle_exact():
    g = tc.Graph.from_edges([(0, 1), (1, 2), (2, 3), (3, 0)], n=4)
    nb = tc.neighborhood_lower_bounds(g, tc.reach_info(g))
    assert nb.pairs == [(4, 4)] * 4


def test_nb_directed_path():
    g = tc.Graph.from_edges([(0, 1), (1, 2)], directed=True, n=3)
    nb = tc.neighborhood_lower_bounds(g, tc.reach_info(g))
    assert nb.pairs[0] == (3, 3)
    assert nb.pairs[2] == tc.scores.INF_PAIR


def test_nb_degree_zero_marked_infinite():
    g = tc.Graph.from_edges([(0, 1)], n=3)
    nb = tc.neighborhood_lower_bounds(g, tc.reach_info(g))
    assert nb.pairs[2] == tc.scores.INF_PAIR
    assert nb.finish_level[2] <= 1


def test_nb_soundness_and_truncation_level(small_corpus):
    for g in small_corpus[:30]:
        reach = tc.reach_info(g)
        nb = tc.neighborhood_lower_bounds(g, reach)
        ref = tc.closeness_all(g)
        href = tc.harmonic_all(g)
        ecc = np.zeros(g.n, np.int64)
        for v in range(g.n):
            dist = tc.bfs(g, v).dist
            ecc[v] = int(dist.max(initial=0)) if (dist >= 0).any() else 0
        for v in range(g.n):
            if ref.reached[v] <= 1:
                continue
            bound = farness_fraction(nb.pairs[v])
            truth = farness_fraction((int(ref.sum_dist[v]), int(ref.reached[v])))
            assert bound <= truth, (v, nb.pairs[v])
            assert nb.harmonic_ub[v] >= href.value[v] - 1e-9
            if reach.is_exact():
                assert nb.finish_level[v] <= ecc[v]
        if reach.is_exact():
            # interval mode may sweep past the eccentricity while the
            # overcounted prefix climbs toward the reach upper bound
            assert nb.levels_used <= max(int(ecc.max()), 1) + 1


def test_nb_interval_candidate_minimum_matches_bruteforce():
    from conftest import brute_reach_min, count_recurrence_rows
    rng = np.random.default_rng(77)
    checked = 0
    while checked < 40:
        n = int(rng.integers(4, 25))
        mask = rng.random((n, n)) < 0.12
        edges = [(i, j) for i in range(n) for j in range(n) if i != j and mask[i, j]]
        g = tc.Graph.from_edges(edges, directed=True, n=n)
        reach = tc.reach_info(g)
        if reach.is_exact():
            continue
        nb = tc.neighborhood_lower_bounds(g, reach)
        gammas = count_recurrence_rows(g)
        for v in range(n):
            if g.out_degrees()[v] == 0 or reach.hi[v] <= 1:
                continue
            got = farness_fraction(nb.pairs[v])
            want = brute_reach_min(gammas[v], int(reach.lo[v]), int(reach.hi[v]))
            assert got == want, (v, nb.pairs[v])
            checked += 1
