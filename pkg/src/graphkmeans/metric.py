"""
Shortest-path distances and graph Voronoi diagrams.

Distances follow edge direction on directed graphs. Voronoi cells grow
outward from the centroids: node ``v`` belongs to the centroid ``c`` that
minimises ``d(c, v)``, ties going to the earlier centroid in the list.
Nodes no centroid can reach are reported separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from heapq import heappop, heappush
from typing import Sequence

import numpy as np

from .errors import GraphError
from .graph import Graph

__all__ = [
    "UNREACHABLE",
    "VoronoiDiagram",
    "sssp",
    "distance_matrix",
    "voronoi_diagram",
    "voronoi_diagram_bruteforce",
]

#: ``cell_of`` marker for nodes outside every cell.
UNREACHABLE = -1


def _neighbors(g: Graph, reverse: bool):
    return g.in_neighbors if reverse else g.out_neighbors


def sssp(g: Graph, source: int, reverse: bool = False) -> np.ndarray:
    """Single-source Dijkstra.

    Parameters
    ----------
    g : Graph
    source : int
    reverse : bool
        Walk edges backwards, giving distances *into* ``source``.

    Returns
    -------
    numpy.ndarray
        Float distances, ``inf`` where unreachable.
    """
    n = g.node_count
    if isinstance(source, bool) or not (isinstance(source, (int, np.integer)) and 0 <= source < n):
        raise GraphError(f"source {source!r} out of range [0, {n})")
    nbrs = _neighbors(g, reverse)
    dist = np.full(n, np.inf)
    dist[source] = 0.0
    done = np.zeros(n, dtype=bool)
    heap = [(0.0, int(source))]
    while heap:
        d, u = heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for v, w in nbrs(u):
            nd = d + w
            if nd < dist[v]:
                dist[v] = nd
                heappush(heap, (nd, v))
    return dist


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs distances, ``D[s, t] = d(s, t)``, by one Dijkstra per source."""
    return np.vstack([sssp(g, s) for s in range(g.node_count)])


@dataclass(frozen=True, eq=False)
class VoronoiDiagram:
    """Partition of the reachable nodes into one cell per centroid.

    Attributes
    ----------
    centroids : tuple of int
        Centroids in list order; cell ``i`` belongs to ``centroids[i]``.
    cell_of : numpy.ndarray
        Per-node cell index, or ``UNREACHABLE``.
    distance : numpy.ndarray
        Per-node distance from its own centroid (``inf`` if unreachable).
    """

    centroids: tuple[int, ...]
    cell_of: np.ndarray
    distance: np.ndarray

    @property
    def k(self) -> int:
        return len(self.centroids)

    @property
    def cells(self) -> tuple[tuple[int, ...], ...]:
        """Ascending node ids of each cell, in centroid order."""
        out: list[list[int]] = [[] for _ in self.centroids]
        for v, c in enumerate(self.cell_of.tolist()):
            if c != UNREACHABLE:
                out[c].append(v)
        return tuple(tuple(c) for c in out)

    @property
    def unreachable(self) -> tuple[int, ...]:
        return tuple(np.flatnonzero(self.cell_of == UNREACHABLE).tolist())

    def same_partition(self, other: "VoronoiDiagram") -> bool:
        """True when both diagrams put every node in the same cell index."""
        return np.array_equal(self.cell_of, other.cell_of)

    def __eq__(self, other):
        if not isinstance(other, VoronoiDiagram):
            return NotImplemented
        return (
            self.centroids == other.centroids
            and np.array_equal(self.cell_of, other.cell_of)
            and np.array_equal(self.distance, other.distance)
        )

    __hash__ = None


def _check_centroids(g: Graph, centroids: Sequence[int]) -> tuple[int, ...]:
    if len(centroids) == 0:
        raise GraphError("centroid list is empty")
    out = []
    for c in centroids:
        if isinstance(c, bool) or not isinstance(c, (int, np.integer)) or not 0 <= c < g.node_count:
            raise GraphError(f"centroid {c!r} out of range [0, {g.node_count})")
        out.append(int(c))
    if len(set(out)) != len(out):
        raise GraphError(f"duplicate centroid in {out}")
    return tuple(out)


def voronoi_diagram(g: Graph, centroids: Sequence[int]) -> VoronoiDiagram:
    """Graph Voronoi diagram by multi-source Dijkstra.

    Every centroid starts at distance 0. Labels are ``(distance, centroid
    index)`` pairs compared lexicographically, so the result equals running
    one Dijkstra per centroid and taking the per-node argmin with ties to the
    lowest index.
    """
    cents = _check_centroids(g, centroids)
    n = g.node_count
    dist = np.full(n, np.inf)
    owner = np.full(n, UNREACHABLE, dtype=np.int64)
    done = np.zeros(n, dtype=bool)
    heap = []
    for i, c in enumerate(cents):
        dist[c] = 0.0
        owner[c] = i
        heap.append((0.0, i, c))
    heap.sort()
    while heap:
        d, i, u = heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for v, w in g.out_neighbors(u):
            if done[v]:
                continue
            nd = d + w
            if nd < dist[v] or (nd == dist[v] and i < owner[v]):
                dist[v] = nd
                owner[v] = i
                heappush(heap, (nd, i, v))
    return VoronoiDiagram(cents, owner, dist)


def voronoi_diagram_bruteforce(g: Graph, centroids: Sequence[int]) -> VoronoiDiagram:
    """Reference diagram from one :func:`sssp` per centroid plus argmin.

    Slow; kept as the oracle for :func:`voronoi_diagram`.
    """
    cents = _check_centroids(g, centroids)
    D = np.vstack([sssp(g, c) for c in cents])
    # argmin returns the first minimum, i.e. the lowest centroid index
    owner = np.argmin(D, axis=0).astype(np.int64)
    best = D[owner, np.arange(g.node_count)]
    owner[~np.isfinite(best)] = UNREACHABLE
    return VoronoiDiagram(cents, owner, best)
