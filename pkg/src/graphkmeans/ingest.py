"""
Readers and builders that turn external data into graphs.

Text formats
------------
Edge list
    One edge per line, ``src dst [weight]`` separated by whitespace. Labels
    are arbitrary tokens without whitespace; weight defaults to 1.0. ``#``
    starts a comment running to the end of the line; blank lines are skipped.
    Labels get node ids in order of first appearance.

Point cloud
    One point per line, coordinates separated by commas (surrounding
    whitespace allowed). Every row must have as many coordinates as the
    first. Blank lines and ``#`` comments are skipped.

OBJ subset
    ``v x y z`` vertex lines and ``f i j k ...`` face lines with 1-based
    vertex indices (``i/t/n`` forms keep only ``i``; negative indices count
    back from the latest vertex). Faces with more than three corners are
    fan-triangulated around the first corner. All other lines are ignored.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, TextIO

import numpy as np

from .errors import GraphError, ParseError
from .graph import Graph

__all__ = [
    "LabelTable",
    "MeshSurface",
    "PointCloud",
    "mesh_to_graph",
    "neighborhood_graph",
    "neighborhood_pairs",
    "read_edge_list",
    "read_obj_mesh",
    "read_point_cloud",
    "write_edge_list",
]


class LabelTable:
    """Bijection between external string labels and node ids."""

    def __init__(self, labels: Iterable[str] = ()):
        self._labels: list[str] = []
        self._ids: dict[str, int] = {}
        for label in labels:
            self.add(label)

    def add(self, label: str) -> int:
        """Id of ``label``, assigning the next free id if it is new."""
        label = str(label)
        if label not in self._ids:
            self._ids[label] = len(self._labels)
            self._labels.append(label)
        return self._ids[label]

    def id_of(self, label: str) -> int:
        return self._ids[label]

    def label_of(self, node: int) -> str:
        return self._labels[node]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self._labels)

    @classmethod
    def range(cls, n: int, start: int = 0) -> "LabelTable":
        return cls(str(i) for i in range(start, start + n))

    def __len__(self):
        return len(self._labels)

    def __contains__(self, label):
        return label in self._ids

    def __eq__(self, other):
        if not isinstance(other, LabelTable):
            return NotImplemented
        return self._labels == other._labels

    def __repr__(self):
        return f"LabelTable({self._labels!r})"


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def read_edge_list(stream: TextIO, directed: bool = False, source=None) -> tuple[Graph, LabelTable]:
    """Parse the edge-list format into a graph and its label table."""
    labels = LabelTable()
    edges = []
    for lineno, raw in enumerate(stream, start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        tokens = line.split()
        if len(tokens) not in (2, 3):
            raise ParseError(
                f"expected 'src dst [weight]', got {len(tokens)} tokens", lineno, source
            )
        a, b = tokens[0], tokens[1]
        weight = 1.0
        if len(tokens) == 3:
            try:
                weight = float(tokens[2])
            except ValueError:
                raise ParseError(f"unparsable weight {tokens[2]!r}", lineno, source) from None
            if not math.isfinite(weight) or weight <= 0.0:
                raise ParseError(f"weight must be positive and finite, got {tokens[2]}", lineno, source)
        if a == b:
            raise ParseError(f"self-loop on {a!r}", lineno, source)
        edges.append((labels.add(a), labels.add(b), weight))
    if len(labels) == 0:
        raise ParseError("edge list contains no edges", None, source)
    return Graph(len(labels), edges, directed=directed), labels


def write_edge_list(g: Graph, labels: LabelTable, stream: TextIO) -> None:
    """Write ``g`` in the edge-list format, one canonical edge per line.

    Isolated nodes cannot be expressed in this format and are dropped.
    """
    for u, v, w in g.edges:
        stream.write(f"{labels.label_of(u)} {labels.label_of(v)} {w!r}\n")


@dataclass(frozen=True, eq=False)
class PointCloud:
    """Points in R^n stored as an ``(m, n)`` float array."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[0] < 1 or pts.shape[1] < 1:
            raise ValueError(f"point cloud must be a nonempty (m, n) array, got shape {pts.shape}")
        if not np.all(np.isfinite(pts)):
            raise ValueError("point coordinates must be finite")
        object.__setattr__(self, "points", pts)

    @property
    def dimension(self) -> int:
        return self.points.shape[1]

    def __len__(self):
        return self.points.shape[0]


def read_point_cloud(stream: TextIO, source=None) -> PointCloud:
    rows = []
    width = None
    for lineno, raw in enumerate(stream, start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        tokens = [t.strip() for t in line.split(",")]
        try:
            row = [float(t) for t in tokens]
        except ValueError:
            raise ParseError(f"non-numeric coordinate in {line!r}", lineno, source) from None
        if not all(math.isfinite(x) for x in row):
            raise ParseError("coordinates must be finite", lineno, source)
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(f"ragged row: expected {width} coordinates, got {len(row)}", lineno, source)
        rows.append(row)
    if not rows:
        raise ParseError("point cloud is empty", None, source)
    return PointCloud(np.array(rows, dtype=float))


def _pair_lengths(P: np.ndarray, i: np.ndarray, j: np.ndarray) -> np.ndarray:
    # both construction routes measure pairs with this one expression
    diff = P[j] - P[i]
    return np.sqrt((diff * diff).sum(axis=1))


def _pairs_bruteforce(P: np.ndarray, epsilon: float):
    m = P.shape[0]
    I, J, D = [], [], []
    for a in range(m - 1):
        j = np.arange(a + 1, m)
        i = np.full(j.size, a)
        d = _pair_lengths(P, i, j)
        keep = d <= epsilon
        I.append(i[keep])
        J.append(j[keep])
        D.append(d[keep])
    if not I:
        return np.zeros(0, int), np.zeros(0, int), np.zeros(0)
    return np.concatenate(I), np.concatenate(J), np.concatenate(D)


def _pairs_grid(P: np.ndarray, epsilon: float):
    m, dim = P.shape
    # slightly oversized cells keep rounding in P / cell from splitting a pair
    # across non-adjacent cells
    cell = epsilon * (1.0 + 1e-9)
    keys = np.floor((P - P.min(axis=0)) / cell).astype(np.int64)
    buckets: dict[tuple, list[int]] = {}
    for idx, key in enumerate(map(tuple, keys.tolist())):
        buckets.setdefault(key, []).append(idx)
    offsets = list(itertools.product((-1, 0, 1), repeat=dim))
    I, J = [], []
    for key, members in buckets.items():
        near = []
        for off in offsets:
            nb = buckets.get(tuple(k + o for k, o in zip(key, off)))
            if nb:
                near.extend(nb)
        near = np.asarray(near)
        for a in members:
            cand = near[near > a]
            I.append(np.full(cand.size, a))
            J.append(cand)
    i = np.concatenate(I) if I else np.zeros(0, int)
    j = np.concatenate(J) if J else np.zeros(0, int)
    d = _pair_lengths(P, i, j)
    keep = d <= epsilon
    i, j, d = i[keep], j[keep], d[keep]
    order = np.lexsort((j, i))
    return i[order], j[order], d[order]


def neighborhood_pairs(pc: PointCloud, epsilon: float, method: str = "grid"):
    """Index pairs ``i < j`` with ``|p_i - p_j| <= epsilon`` and their distances.

    ``method`` is ``"grid"`` (uniform bucketing) or ``"brute"`` (all pairs).
    Both return the same arrays, sorted by ``(i, j)``.
    """
    if not (isinstance(epsilon, (int, float, np.floating)) and epsilon > 0 and math.isfinite(epsilon)):
        raise ValueError(f"epsilon must be positive and finite, got {epsilon!r}")
    if method == "grid":
        return _pairs_grid(pc.points, float(epsilon))
    if method == "brute":
        return _pairs_bruteforce(pc.points, float(epsilon))
    raise ValueError(f"unknown method {method!r}")


def neighborhood_graph(pc: PointCloud, epsilon: float, method: str = "grid") -> Graph:
    """Undirected epsilon-neighborhood graph weighted by Euclidean distance.

    Raises
    ------
    GraphError
        If two points coincide, since the joining edge would have zero weight.
    """
    if not isinstance(pc, PointCloud):
        pc = PointCloud(pc)
    i, j, d = neighborhood_pairs(pc, epsilon, method)
    if np.any(d == 0.0):
        k = int(np.flatnonzero(d == 0.0)[0])
        raise GraphError(f"points {i[k]} and {j[k]} coincide")
    return Graph(len(pc), zip(i.tolist(), j.tolist(), d.tolist()), directed=False)


@dataclass(frozen=True, eq=False)
class MeshSurface:
    """Triangle mesh: ``(m, 3)`` vertex positions and ``(f, 3)`` index triples."""

    vertices: np.ndarray
    faces: np.ndarray

    def __post_init__(self):
        V = np.asarray(self.vertices, dtype=float).reshape(-1, 3)
        F = np.asarray(self.faces, dtype=np.int64).reshape(-1, 3)
        if F.size and (F.min() < 0 or F.max() >= len(V)):
            raise ValueError("face index out of range")
        if F.size and np.any((F[:, 0] == F[:, 1]) | (F[:, 1] == F[:, 2]) | (F[:, 0] == F[:, 2])):
            raise ValueError("degenerate face with a repeated vertex")
        object.__setattr__(self, "vertices", V)
        object.__setattr__(self, "faces", F)


def _obj_index(token: str, nverts: int, lineno: int, source) -> int:
    head = token.split("/", 1)[0]
    try:
        idx = int(head)
    except ValueError:
        raise ParseError(f"bad face index {token!r}", lineno, source) from None
    idx = idx - 1 if idx > 0 else nverts + idx
    if idx < 0 or idx >= nverts:
        raise ParseError(f"face index {head} out of range (have {nverts} vertices)", lineno, source)
    return idx


def read_obj_mesh(stream: TextIO, source=None) -> MeshSurface:
    verts: list[list[float]] = []
    faces: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(stream, start=1):
        tokens = _strip_comment(raw).split()
        if not tokens:
            continue
        if tokens[0] == "v":
            if len(tokens) < 4:
                raise ParseError("vertex needs three coordinates", lineno, source)
            try:
                xyz = [float(t) for t in tokens[1:4]]
            except ValueError:
                raise ParseError(f"unparsable coordinate in {raw.strip()!r}", lineno, source) from None
            if not all(math.isfinite(c) for c in xyz):
                raise ParseError("vertex coordinates must be finite", lineno, source)
            verts.append(xyz)
        elif tokens[0] == "f":
            corners = [_obj_index(t, len(verts), lineno, source) for t in tokens[1:]]
            if len(corners) < 3:
                raise ParseError(f"face needs at least 3 vertices, got {len(corners)}", lineno, source)
            if len(set(corners)) != len(corners):
                raise ParseError("degenerate face with a repeated vertex", lineno, source)
            for a, b in zip(corners[1:-1], corners[2:]):
                faces.append((corners[0], a, b))
    return MeshSurface(np.array(verts, dtype=float).reshape(-1, 3), np.array(faces, dtype=np.int64).reshape(-1, 3))


def mesh_to_graph(mesh: MeshSurface) -> Graph:
    """Undirected graph of the mesh edges weighted by edge length."""
    V = mesh.vertices
    if len(V) == 0:
        raise GraphError("mesh has no vertices")
    pairs = set()
    for a, b, c in mesh.faces.tolist():
        for u, v in ((a, b), (b, c), (a, c)):
            pairs.add((min(u, v), max(u, v)))
    edges = []
    for u, v in sorted(pairs):
        length = float(np.linalg.norm(V[u] - V[v]))
        if length == 0.0:
            raise GraphError(f"zero-length mesh edge between vertices {u} and {v}")
        edges.append((u, v, length))
    return Graph(len(V), edges, directed=False)

