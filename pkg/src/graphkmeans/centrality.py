"""
Node centrality measures.

Every measure takes a :class:`~graphkmeans.graph.Graph` and returns
:class:`CentralityScores`. Measures are also reachable by name through
:func:`compute_centrality`, which is what the clustering update step uses.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import sparse

from .errors import ConvergenceError, GraphError
from .graph import Graph
from .metric import sssp

__all__ = [
    "MEASURES",
    "CentralityScores",
    "PageRankParams",
    "closeness_centrality",
    "compute_centrality",
    "degree_centrality",
    "eigenvector_centrality",
    "harmonic_centrality",
    "pagerank",
    "transition_matrix",
]


@dataclass(frozen=True, eq=False)
class CentralityScores:
    values: np.ndarray
    measure: str

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


@dataclass(frozen=True)
class PageRankParams:
    """Power-iteration settings for :func:`pagerank`.

    ``tolerance`` bounds the L1 change between successive iterates.
    """

    damping: float = 0.85
    tolerance: float = 1e-10
    max_iterations: int = 1000

    def __post_init__(self):
        if not 0.0 < self.damping < 1.0:
            raise ValueError(f"damping must lie in (0, 1), got {self.damping}")
        if not self.tolerance > 0.0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be positive, got {self.max_iterations}")


def _require_nodes(g: Graph):
    if g is None or g.node_count < 1:
        raise GraphError("centrality needs a graph with at least one node")


def transition_matrix(g: Graph) -> sparse.csr_matrix:
    """Row-stochastic random-walk matrix over out-edges, ignoring weights.

    Undirected edges are walked both ways. Rows of dangling nodes are zero.
    """
    n = g.node_count
    rows, cols = [], []
    for u in range(n):
        for v, _ in g.out_neighbors(u):
            rows.append(u)
            cols.append(v)
    deg = np.array([g.out_degree(u) for u in range(n)], dtype=float)
    data = 1.0 / deg[rows] if rows else np.zeros(0)
    return sparse.csr_matrix((data, (rows, cols)), shape=(n, n))


def pagerank(g: Graph, params: PageRankParams | None = None) -> CentralityScores:
    """PageRank by power iteration from the uniform vector.

    Iterates ``x <- a * (M^T x + dangling(x) / n) + (1 - a) / n`` where ``M``
    is :func:`transition_matrix` and ``dangling(x)`` is the mass sitting on
    nodes without out-edges. Stops when the L1 change drops below
    ``params.tolerance`` or after ``params.max_iterations`` steps; the result
    is renormalised to sum to one.
    """
    _require_nodes(g)
    params = params or PageRankParams()
    n = g.node_count
    alpha = params.damping
    Mt = transition_matrix(g).T.tocsr()
    dangling = np.array([g.out_degree(u) == 0 for u in range(n)])
    x = np.full(n, 1.0 / n)
    for _ in range(params.max_iterations):
        nxt = alpha * (Mt @ x + x[dangling].sum() / n) + (1.0 - alpha) / n
        delta = np.abs(nxt - x).sum()
        x = nxt
        if delta < params.tolerance:
            break
    return CentralityScores(x / x.sum(), "pagerank")


def _all_distances_into(g: Graph) -> np.ndarray:
    # row v holds d(u, v) for every u
    return np.vstack([sssp(g, v, reverse=True) for v in range(g.node_count)])


def harmonic_centrality(g: Graph) -> CentralityScores:
    """Sum of ``1 / d(u, v)`` over nodes ``u != v`` that reach ``v``."""
    _require_nodes(g)
    D = _all_distances_into(g)
    with np.errstate(divide="ignore"):
        inv = np.where(np.isfinite(D) & (D > 0), 1.0 / D, 0.0)
    return CentralityScores(inv.sum(axis=1), "harmonic")


def closeness_centrality(g: Graph) -> CentralityScores:
    """Closeness scaled by the fraction of nodes that reach ``v``.

    ``C(v) = (r - 1) / sum(d(u, v)) * (r - 1) / (n - 1)`` with ``r`` the number
    of nodes (``v`` included) at finite distance; 0 when ``r <= 1``.
    """
    _require_nodes(g)
    n = g.node_count
    D = _all_distances_into(g)
    out = np.zeros(n)
    for v in range(n):
        finite = D[v][np.isfinite(D[v])]
        r = finite.size
        total = finite.sum()
        if r > 1 and total > 0:
            out[v] = (r - 1) / total * (r - 1) / (n - 1)
    return CentralityScores(out, "closeness")


def eigenvector_centrality(
    g: Graph, tolerance: float = 1e-10, max_iterations: int = 1000
) -> CentralityScores:
    """Principal eigenvector of the weighted adjacency matrix.

    Power iteration on ``x <- (A^T + I) x`` with L2 normalisation. The identity
    shift leaves the eigenvectors alone and stops bipartite graphs (paths,
    even cycles) from oscillating.

    Raises
    ------
    ConvergenceError
        If the graph has no edges (``A^T x`` vanishes) or the iteration does
        not settle within ``max_iterations``.
    """
    _require_nodes(g)
    n = g.node_count
    if g.edge_count == 0:
        raise ConvergenceError("eigenvector centrality undefined: adjacency matrix is zero")
    rows, cols, data = [], [], []
    for u in range(n):
        for v, w in g.out_neighbors(u):
            rows.append(u)
            cols.append(v)
            data.append(w)
    At = sparse.csr_matrix((data, (rows, cols)), shape=(n, n)).T.tocsr()
    x = np.full(n, 1.0 / np.sqrt(n))
    for _ in range(max_iterations):
        nxt = At @ x + x
        nxt /= np.linalg.norm(nxt)
        if np.linalg.norm(nxt - x) < tolerance:
            return CentralityScores(nxt, "eigenvector")
        x = nxt
    raise ConvergenceError(
        f"eigenvector centrality did not converge in {max_iterations} iterations"
    )


def degree_centrality(g: Graph) -> CentralityScores:
    _require_nodes(g)
    n = g.node_count
    if g.directed:
        deg = [g.out_degree(v) + g.in_degree(v) for v in range(n)]
    else:
        deg = [g.out_degree(v) for v in range(n)]
    return CentralityScores(np.asarray(deg, dtype=float), "degree")


MEASURES = {
    "pagerank": pagerank,
    "harmonic": harmonic_centrality,
    "closeness": closeness_centrality,
    "eigenvector": eigenvector_centrality,
    "degree": degree_centrality,
}


def compute_centrality(
    g: Graph, measure: str = "pagerank", pagerank_params: PageRankParams | None = None
) -> CentralityScores:
    """Score ``g`` with the measure registered under ``measure``."""
    try:
        fn = MEASURES[measure]
    except KeyError:
        raise ValueError(
            f"unknown centrality measure {measure!r}; choose from {sorted(MEASURES)}"
        ) from None
    if measure == "pagerank":
        return fn(g, pagerank_params)
    return fn(g)
