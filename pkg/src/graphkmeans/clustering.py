"""
k-means style clustering on graphs.

Lloyd's iteration with the Euclidean pieces swapped out: the assignment step
is the graph Voronoi diagram of the current centroids under shortest-path
distance, and the update step moves each centroid to the most central node
of its cell's induced subgraph (PageRank by default).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .centrality import MEASURES, PageRankParams, compute_centrality
from .errors import GraphError
from .graph import Graph, induced_subgraph
from .metric import UNREACHABLE, VoronoiDiagram, voronoi_diagram

__all__ = [
    "ClusteringConfig",
    "ClusteringResult",
    "ClusteringState",
    "argmax_lowest",
    "cluster",
    "initialize_centroids",
    "lloyd_step",
    "update_centroids",
]

# scores this close to the maximum count as tied
_TIE_RTOL = 1e-9
_TIE_ATOL = 1e-12


@dataclass(frozen=True)
class ClusteringConfig:
    k: int
    measure: str = "pagerank"
    pagerank_params: PageRankParams = field(default_factory=PageRankParams)
    max_iterations: int = 100
    stability_window: int = 2
    rng_seed: int = 0

    def __post_init__(self):
        if isinstance(self.k, bool) or not isinstance(self.k, (int, np.integer)) or self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")
        if self.measure not in MEASURES:
            raise ValueError(
                f"unknown centrality measure {self.measure!r}; choose from {sorted(MEASURES)}"
            )
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be positive")
        if self.stability_window < 2:
            raise ValueError("stability_window counts identical diagrams and must be >= 2")
        if not 0 <= self.rng_seed < 2**64:
            raise ValueError("rng_seed must be an unsigned 64-bit integer")

    def check(self, g: Graph):
        if self.k > g.node_count:
            raise GraphError(f"k={self.k} exceeds the node count {g.node_count}")


@dataclass(frozen=True)
class ClusteringState:
    centroids: tuple[int, ...]
    diagram: VoronoiDiagram
    iteration: int
    converged: bool


@dataclass(frozen=True)
class ClusteringResult:
    """Output of :func:`cluster`.

    ``assignment[v]`` is the cluster index of node ``v`` or ``None`` when no
    centroid reached it. ``history[t]`` holds the centroids used by the
    assignment step of iteration ``t + 1``.
    """

    state: ClusteringState
    assignment: tuple[Optional[int], ...]
    history: tuple[tuple[int, ...], ...]

    @property
    def centroids(self) -> tuple[int, ...]:
        return self.state.centroids

    @property
    def converged(self) -> bool:
        return self.state.converged

    @property
    def iterations(self) -> int:
        return self.state.iteration

    @property
    def clusters(self) -> tuple[tuple[int, ...], ...]:
        return self.state.diagram.cells

    @property
    def unassigned(self) -> tuple[int, ...]:
        return self.state.diagram.unreachable


def initialize_centroids(g: Graph, k: int, rng_seed: int = 0) -> list[int]:
    """Pick ``k`` distinct nodes uniformly at random, reproducibly per seed."""
    n = g.node_count
    if k < 1 or k > n:
        raise GraphError(f"k must lie in [1, {n}], got {k}")
    rng = np.random.default_rng(rng_seed)
    return rng.choice(n, size=k, replace=False).tolist()


def argmax_lowest(values: np.ndarray) -> int:
    """Index of the maximum, taking the lowest index among near-equal maxima.

    Power iteration leaves rounding noise between nodes that are exactly
    symmetric, so ties are judged with a small relative tolerance.
    """
    values = np.asarray(values)
    top = values.max()
    tied = np.isclose(values, top, rtol=_TIE_RTOL, atol=_TIE_ATOL)
    return int(np.flatnonzero(tied)[0])


def update_centroids(
    g: Graph,
    diagram: VoronoiDiagram,
    measure: str = "pagerank",
    pagerank_params: PageRankParams | None = None,
) -> list[int]:
    """Most central node of each cell's induced subgraph, in cell order."""
    if measure not in MEASURES:
        raise ValueError(
            f"unknown centrality measure {measure!r}; choose from {sorted(MEASURES)}"
        )
    out = []
    for cell in diagram.cells:
        if len(cell) == 1:
            out.append(cell[0])
            continue
        sub = induced_subgraph(g, cell)
        scores = compute_centrality(sub.graph, measure, pagerank_params)
        out.append(sub.to_parent(argmax_lowest(scores.values)))
    return out


def lloyd_step(
    g: Graph,
    centroids: Sequence[int],
    measure: str = "pagerank",
    pagerank_params: PageRankParams | None = None,
) -> tuple[VoronoiDiagram, list[int]]:
    """One assignment + update round: returns the diagram and new centroids."""
    diagram = voronoi_diagram(g, centroids)
    return diagram, update_centroids(g, diagram, measure, pagerank_params)


def cluster(
    g: Graph,
    config: ClusteringConfig,
    initial_centroids: Sequence[int] | None = None,
) -> ClusteringResult:
    """Partition ``g`` into ``config.k`` clusters.

    Alternates :func:`voronoi_diagram` and :func:`update_centroids` until the
    last ``config.stability_window`` diagrams assign every node identically
    (``converged=True``) or ``config.max_iterations`` assignment steps have
    run. The reported state pairs the last diagram with the centroids that
    produced it, so a converged result is a fixed point of :func:`lloyd_step`.

    Parameters
    ----------
    g : Graph
    config : ClusteringConfig
    initial_centroids : sequence of int, optional
        Start from these nodes instead of a seeded random draw. Must hold
        ``config.k`` distinct nodes.
    """
    config.check(g)
    if initial_centroids is None:
        centroids = initialize_centroids(g, config.k, config.rng_seed)
    else:
        centroids = [int(c) for c in initial_centroids]
        if len(centroids) != config.k:
            raise GraphError(f"expected {config.k} initial centroids, got {len(centroids)}")

    history: list[tuple[int, ...]] = []
    streak = 0
    previous: VoronoiDiagram | None = None
    converged = False
    iteration = 0
    while iteration < config.max_iterations:
        iteration += 1
        diagram, updated = lloyd_step(g, centroids, config.measure, config.pagerank_params)
        history.append(tuple(centroids))
        if previous is not None and diagram.same_partition(previous):
            streak += 1
        else:
            streak = 1
        previous = diagram
        if streak >= config.stability_window:
            converged = True
            break
        centroids = updated

    state = ClusteringState(tuple(previous.centroids), previous, iteration, converged)
    assignment = tuple(
        None if c == UNREACHABLE else int(c) for c in previous.cell_of.tolist()
    )
    return ClusteringResult(state, assignment, tuple(history))
