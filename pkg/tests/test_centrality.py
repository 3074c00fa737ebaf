import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphkmeans import (
    ConvergenceError,
    Graph,
    PageRankParams,
    closeness_centrality,
    compute_centrality,
    degree_centrality,
    eigenvector_centrality,
    harmonic_centrality,
    pagerank,
)
from graphkmeans.centrality import MEASURES
from graphkmeans.clustering import argmax_lowest

from graphs import complete_graph, cycle_graph, path_graph, star_graph
from oracles import (
    all_pairs,
    closeness_from_distances,
    dense_eigenvector,
    dense_pagerank,
    harmonic_from_distances,
    random_graph,
)


def test_pagerank_single_node():
    assert pagerank(Graph(1)).values.tolist() == [1.0]


def test_pagerank_directed_cycle_uniform():
    np.testing.assert_allclose(pagerank(cycle_graph(3, directed=True)).values, 1 / 3, atol=1e-12)


def test_pagerank_with_dangling_node():
    g = Graph(3, [(0, 1), (1, 0), (0, 2)], directed=True)
    # dense linear solve gives these exact fractions
    expected = np.array([74, 57, 57]) / 188
    np.testing.assert_allclose(dense_pagerank(g), expected, atol=1e-14)
    np.testing.assert_allclose(pagerank(g).values, expected, atol=1e-8)


def test_pagerank_star_hub():
    scores = pagerank(star_graph(4)).values
    np.testing.assert_allclose(scores, np.array([352, 97, 97, 97, 97]) / 740, atol=1e-8)


def test_pagerank_ignores_weights():
    a = Graph(3, [(0, 1, 1.0), (1, 2, 7.0)])
    b = Graph(3, [(0, 1, 0.2), (1, 2, 0.3)])
    np.testing.assert_array_equal(pagerank(a).values, pagerank(b).values)


def test_pagerank_params_validation():
    for bad in ({"damping": 0.0}, {"damping": 1.0}, {"tolerance": 0.0}, {"max_iterations": 0}):
        with pytest.raises(ValueError):
            PageRankParams(**bad)


def test_pagerank_damping_is_used():
    g = Graph(3, [(0, 1), (1, 0), (0, 2)], directed=True)
    got = pagerank(g, PageRankParams(damping=0.5)).values
    np.testing.assert_allclose(got, dense_pagerank(g, 0.5), atol=1e-9)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.booleans())
def test_pagerank_matches_dense_solve(seed, directed):
    rng = np.random.default_rng(seed)
    g = random_graph(rng, int(rng.integers(1, 30)), float(rng.uniform(0, 0.5)), directed)
    pr = pagerank(g).values
    assert abs(pr.sum() - 1) <= 1e-9
    np.testing.assert_allclose(pr, dense_pagerank(g), atol=1e-8, rtol=0)
    if all(g.out_degree(v) for v in range(g.node_count)):
        assert pr.min() >= 0.15 / g.node_count - 1e-12


def test_harmonic_small_cases():
    assert harmonic_centrality(Graph(1)).values.tolist() == [0.0]
    assert harmonic_centrality(Graph(2, [(0, 1)])).values.tolist() == [1.0, 1.0]
    assert harmonic_centrality(path_graph(3)).values.tolist() == [1.5, 2.0, 1.5]


def test_harmonic_directed_uses_incoming():
    g = path_graph(3, directed=True)
    np.testing.assert_allclose(harmonic_centrality(g).values, [0.0, 1.0, 1.5])


def test_closeness_small_cases():
    assert closeness_centrality(Graph(1)).values.tolist() == [0.0]
    assert closeness_centrality(Graph(2, [(0, 1)])).values.tolist() == [1.0, 1.0]
    np.testing.assert_allclose(closeness_centrality(star_graph(3)).values, [1.0, 0.6, 0.6, 0.6])


def test_closeness_isolated_node_scores_zero():
    g = Graph(3, [(0, 1)])
    # two nodes reach each other at distance 1; scaled by 1/2
    np.testing.assert_allclose(closeness_centrality(g).values, [0.5, 0.5, 0.0])


def test_eigenvector_cases():
    with pytest.raises(ConvergenceError):
        eigenvector_centrality(Graph(1))
    np.testing.assert_allclose(
        eigenvector_centrality(cycle_graph(3)).values, np.full(3, 1 / np.sqrt(3)), atol=1e-9
    )
    got = eigenvector_centrality(path_graph(3)).values
    np.testing.assert_allclose(dense_eigenvector(path_graph(3)), [0.5, 1 / np.sqrt(2), 0.5])
    np.testing.assert_allclose(got, [0.5, 1 / np.sqrt(2), 0.5], atol=1e-9)


def test_eigenvector_reports_nonconvergence():
    g = Graph(40, [(i, i + 1) for i in range(39)])
    with pytest.raises(ConvergenceError):
        eigenvector_centrality(g, tolerance=1e-15, max_iterations=3)


def test_eigenvector_matches_dense_on_random_connected(rng):
    for _ in range(10):
        g = random_graph(rng, 15, 0.4, False, weights="float")
        if np.isinf(all_pairs(g)).any():
            continue
        np.testing.assert_allclose(eigenvector_centrality(g).values, dense_eigenvector(g), atol=1e-7)


def test_degree_cases():
    assert degree_centrality(Graph(1)).values.tolist() == [0.0]
    assert degree_centrality(cycle_graph(3)).values.tolist() == [2.0, 2.0, 2.0]
    assert degree_centrality(Graph(3, [(0, 1), (0, 2)], directed=True)).values.tolist() == [2.0, 1.0, 1.0]


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_path_and_star_formulas(n):
    for g in (path_graph(n), star_graph(n - 1)):
        D = all_pairs(g)
        np.testing.assert_allclose(harmonic_centrality(g).values, harmonic_from_distances(D), atol=1e-12, rtol=0)
        np.testing.assert_allclose(closeness_centrality(g).values, closeness_from_distances(D), atol=1e-12, rtol=0)


def test_distance_measures_match_oracle_on_random_graphs(rng):
    for directed in (False, True):
        for _ in range(10):
            g = random_graph(rng, 12, 0.25, directed, weights="float")
            D = all_pairs(g)
            np.testing.assert_allclose(harmonic_centrality(g).values, harmonic_from_distances(D), rtol=1e-12)
            np.testing.assert_allclose(closeness_centrality(g).values, closeness_from_distances(D), rtol=1e-12)


@pytest.mark.parametrize("measure", sorted(MEASURES))
@pytest.mark.parametrize("g", [cycle_graph(7), Graph(6, complete_graph(6)), cycle_graph(5, directed=True)])
def test_vertex_transitive_graphs_give_constant_scores(measure, g):
    values = compute_centrality(g, measure).values
    np.testing.assert_allclose(values, values[0], rtol=1e-9)


@pytest.mark.parametrize("measure", sorted(MEASURES))
def test_relabeling_permutes_scores(measure, rng):
    g = random_graph(rng, 10, 0.5, False, weights="float")
    perm = rng.permutation(10)
    h = Graph(10, [(perm[u], perm[v], w) for u, v, w in g.edges])
    a = compute_centrality(g, measure).values
    b = compute_centrality(h, measure).values
    np.testing.assert_allclose(b[perm], a, rtol=1e-8, atol=1e-12)


@pytest.mark.parametrize("measure", ["harmonic", "closeness"])
def test_weight_scaling_keeps_argmax(measure, rng):
    for _ in range(10):
        g = random_graph(rng, 10, 0.4, False, weights="float")
        h = Graph(10, [(u, v, 3.7 * w) for u, v, w in g.edges])
        a = compute_centrality(g, measure).values
        b = compute_centrality(h, measure).values
        assert argmax_lowest(a) == argmax_lowest(b)


def test_unknown_measure():
    with pytest.raises(ValueError, match="unknown centrality measure"):
        compute_centrality(Graph(1), "voterank")
