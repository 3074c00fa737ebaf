import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphkmeans import Graph, GraphError, sssp, voronoi_diagram
from graphkmeans.metric import UNREACHABLE, distance_matrix, voronoi_diagram_bruteforce

from graphs import cycle_graph, path_graph
from oracles import all_pairs, random_graph, simple_path_distance, voronoi_oracle


def test_sssp_single_node():
    assert sssp(Graph(1), 0).tolist() == [0.0]


def test_sssp_directed_path_and_unreachable():
    g = path_graph(3, directed=True)
    assert sssp(g, 0).tolist() == [0.0, 1.0, 2.0]
    assert sssp(g, 2).tolist() == [np.inf, np.inf, 0.0]


def test_sssp_reverse_walks_into_source():
    g = path_graph(3, directed=True)
    assert sssp(g, 2, reverse=True).tolist() == [2.0, 1.0, 0.0]


def test_sssp_weighted_detour():
    g = Graph(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 5.0)])
    expected = [simple_path_distance(g, 0, t) for t in range(3)]
    assert expected == [0.0, 1.0, 2.0]
    assert sssp(g, 0).tolist() == expected


@pytest.mark.parametrize("source", [-1, 3, 1.5])
def test_sssp_rejects_bad_source(source):
    with pytest.raises(GraphError):
        sssp(path_graph(3), source)


def test_sssp_matches_path_enumeration(rng):
    for _ in range(25):
        n = int(rng.integers(2, 7))
        g = random_graph(rng, n, 0.5, bool(rng.integers(2)), weights="float")
        for s in range(n):
            got = sssp(g, s)
            for t in range(n):
                assert got[t] == pytest.approx(simple_path_distance(g, s, t), rel=1e-12)


def test_distance_matrix_matches_scipy(rng):
    for directed in (False, True):
        g = random_graph(rng, 20, 0.2, directed, weights="float")
        np.testing.assert_array_equal(distance_matrix(g), all_pairs(g))


def test_voronoi_all_nodes_are_centroids():
    g = cycle_graph(5)
    vd = voronoi_diagram(g, [4, 2, 0, 1, 3])
    assert vd.cells == ((4,), (2,), (0,), (1,), (3,))
    assert vd.unreachable == ()


def test_voronoi_tie_goes_to_first_centroid():
    g = path_graph(5)
    vd = voronoi_diagram(g, [0, 4])
    assert vd.cells == ((0, 1, 2), (3, 4))
    vd = voronoi_diagram(g, [4, 0])
    assert vd.cells == ((2, 3, 4), (0, 1))


def test_voronoi_unreachable_set():
    g = Graph(4, [(0, 1), (1, 2), (2, 0)], directed=True)
    vd = voronoi_diagram(g, [0])
    owner, _ = voronoi_oracle(g, [0])
    assert owner.tolist() == [0, 0, 0, -1]
    assert vd.cell_of.tolist() == owner.tolist()
    assert vd.cells == ((0, 1, 2),)
    assert vd.unreachable == (3,)


def test_voronoi_grows_outward_on_directed_graphs():
    # 1 -> 0 only: centroid 0 cannot reach 1
    g = Graph(2, [(1, 0)], directed=True)
    assert voronoi_diagram(g, [0]).unreachable == (1,)
    assert voronoi_diagram(g, [1]).cells == ((0, 1),)


@pytest.mark.parametrize("centroids", [[], [0, 0], [5], [-1]])
def test_voronoi_rejects_bad_centroids(centroids):
    with pytest.raises(GraphError):
        voronoi_diagram(path_graph(3), centroids)


def _check_diagram(g, cents, vd):
    owner, best = voronoi_oracle(g, cents)
    assert vd.cell_of.tolist() == owner.tolist()
    np.testing.assert_array_equal(vd.distance, best)


def test_voronoi_matches_oracle_on_random_graphs(rng):
    for trial in range(60):
        n = int(rng.integers(2, 40))
        g = random_graph(rng, n, float(rng.uniform(0.05, 0.3)), trial % 2 == 0, weights="int")
        k = int(rng.integers(1, n + 1))
        cents = rng.choice(n, size=k, replace=False).tolist()
        vd = voronoi_diagram(g, cents)
        _check_diagram(g, cents, vd)
        assert vd == voronoi_diagram_bruteforce(g, cents)


@settings(max_examples=50)
@given(st.integers(0, 2**32 - 1))
def test_voronoi_invariants(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 25))
    g = random_graph(rng, n, 0.2, bool(rng.integers(2)), weights="int")
    k = int(rng.integers(1, n))
    cents = rng.choice(n, size=k + 1, replace=False).tolist()
    vd = voronoi_diagram(g, cents[:k])
    cells = vd.cells
    flat = [v for c in cells for v in c]
    assert len(flat) == len(set(flat))
    assert sorted(flat + list(vd.unreachable)) == list(range(n))
    D = all_pairs(g)
    for i, c in enumerate(vd.centroids):
        assert c in cells[i] and vd.distance[c] == 0.0
        for v in cells[i]:
            assert all(D[c, v] <= D[other, v] for other in vd.centroids)
    # one more centroid never enlarges an existing cell
    bigger = voronoi_diagram(g, cents)
    for old, new in zip(cells, bigger.cells):
        assert set(new) <= set(old)


@settings(max_examples=30)
@given(st.integers(0, 2**32 - 1))
def test_triangle_inequality_undirected(seed):
    rng = np.random.default_rng(seed)
    g = random_graph(rng, 15, 0.3, False, weights="float")
    D = distance_matrix(g)
    for a, b, c in rng.integers(0, 15, size=(40, 3)):
        assert D[a, c] <= D[a, b] + D[b, c] + 1e-12


def test_unreachable_marker_value():
    assert UNREACHABLE == -1
