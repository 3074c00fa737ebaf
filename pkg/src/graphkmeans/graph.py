"""
Immutable weighted graphs over dense integer node ids.

Nodes are ``0 .. node_count - 1``. Edges carry strictly positive finite
weights. Self-loops are rejected and parallel edges collapse to the lightest
one. Undirected graphs store each edge once (``u < v``) and expose it from
both endpoints.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GraphError

__all__ = ["Graph", "Subgraph", "build_graph", "induced_subgraph"]


class Graph:
    """Weighted directed or undirected graph in adjacency form.

    Parameters
    ----------
    node_count : int
        Number of nodes, at least 1.
    edges : iterable of (int, int, float)
        ``(source, target, weight)`` triples. A two-tuple gets weight 1.0.
    directed : bool
        Edge orientation semantics.
    """

    __slots__ = ("_n", "_directed", "_edges", "_out", "_in")

    def __init__(self, node_count: int, edges: Iterable[Sequence] = (), directed: bool = False):
        if isinstance(node_count, bool) or not isinstance(node_count, int):
            raise GraphError(f"node_count must be an integer, got {node_count!r}")
        if node_count < 1:
            raise GraphError("node_count must be at least 1")
        self._n = node_count
        self._directed = bool(directed)

        best: dict[tuple[int, int], float] = {}
        for edge in edges:
            if len(edge) == 2:
                u, v = edge
                w = 1.0
            elif len(edge) == 3:
                u, v, w = edge
            else:
                raise GraphError(f"edge must be (u, v) or (u, v, w), got {edge!r}")
            u, v = _check_node(u, node_count), _check_node(v, node_count)
            w = float(w)
            if not math.isfinite(w) or w <= 0.0:
                raise GraphError(f"edge ({u}, {v}) has invalid weight {w!r}")
            if u == v:
                raise GraphError(f"self-loop at node {u}")
            key = (u, v) if self._directed or u < v else (v, u)
            if key not in best or w < best[key]:
                best[key] = w

        self._edges = tuple((u, v, w) for (u, v), w in sorted(best.items()))
        out: list[list[tuple[int, float]]] = [[] for _ in range(node_count)]
        inc: list[list[tuple[int, float]]] = [[] for _ in range(node_count)]
        for u, v, w in self._edges:
            out[u].append((v, w))
            if self._directed:
                inc[v].append((u, w))
            else:
                out[v].append((u, w))
        self._out = tuple(tuple(sorted(a)) for a in out)
        self._in = tuple(tuple(sorted(a)) for a in inc) if self._directed else self._out

    @property
    def node_count(self) -> int:
        return self._n

    @property
    def directed(self) -> bool:
        return self._directed

    @property
    def edges(self) -> tuple[tuple[int, int, float], ...]:
        """Canonically sorted edges; undirected edges appear once with ``u < v``."""
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def out_neighbors(self, v: int) -> tuple[tuple[int, float], ...]:
        """``(neighbor, weight)`` pairs reachable along one edge from ``v``."""
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[tuple[int, float], ...]:
        """``(neighbor, weight)`` pairs with an edge into ``v``."""
        return self._in[v]

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return len(self._in[v])

    def has_edge(self, u: int, v: int) -> bool:
        return any(x == v for x, _ in self._out[u])

    def weight(self, u: int, v: int) -> float:
        for x, w in self._out[u]:
            if x == v:
                return w
        raise KeyError((u, v))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self._n, self._directed, self._edges) == (other._n, other._directed, other._edges)

    def __hash__(self):
        return hash((self._n, self._directed, self._edges))

    def __repr__(self):
        kind = "directed" if self._directed else "undirected"
        return f"Graph(n={self._n}, edges={len(self._edges)}, {kind})"


def _check_node(v, n: int) -> int:
    if isinstance(v, bool):
        raise GraphError(f"node id must be an integer, got {v!r}")
    try:
        iv = int(v)
    except (TypeError, ValueError):
        raise GraphError(f"node id must be an integer, got {v!r}") from None
    if iv != v or not 0 <= iv < n:
        raise GraphError(f"node {v!r} out of range [0, {n})")
    return iv


def build_graph(node_count: int, edges: Iterable[Sequence] = (), directed: bool = False) -> Graph:
    """Build a :class:`Graph`; see the class for the validation rules."""
    return Graph(node_count, edges, directed=directed)


@dataclass(frozen=True)
class Subgraph:
    """An induced subgraph re-indexed to ``0 .. len(nodes) - 1``.

    ``nodes[i]`` is the parent id of subgraph node ``i``; ``nodes`` is ascending.
    """

    nodes: tuple[int, ...]
    graph: Graph

    def to_parent(self, i: int) -> int:
        return self.nodes[i]

    def index_of(self, parent: int) -> int:
        i = bisect_left(self.nodes, parent)
        if i == len(self.nodes) or self.nodes[i] != parent:
            raise KeyError(parent)
        return i


def induced_subgraph(g: Graph, nodes: Iterable[int]) -> Subgraph:
    """Subgraph on ``nodes`` keeping every edge with both endpoints inside."""
    chosen = sorted({_check_node(v, g.node_count) for v in nodes})
    if not chosen:
        raise GraphError("induced_subgraph needs a nonempty node set")
    local = {v: i for i, v in enumerate(chosen)}
    edges = [
        (local[u], local[v], w)
        for u, v, w in g.edges
        if u in local and v in local
    ]
    return Subgraph(tuple(chosen), Graph(len(chosen), edges, directed=g.directed))
