"""
graphkmeans
===========

k-means style clustering for directed and undirected graphs. Clusters are
graph Voronoi cells under shortest-path distance; each centroid moves to the
most central node (PageRank by default) of its cell. Point clouds and
triangle meshes are clustered through their epsilon-neighborhood and edge
graphs.
"""

from .centrality import (
    MEASURES,
    CentralityScores,
    PageRankParams,
    closeness_centrality,
    compute_centrality,
    degree_centrality,
    eigenvector_centrality,
    harmonic_centrality,
    pagerank,
)
from .clustering import (
    ClusteringConfig,
    ClusteringResult,
    ClusteringState,
    cluster,
    initialize_centroids,
    lloyd_step,
    update_centroids,
)
from .errors import ConvergenceError, GraphError, ParseError
from .graph import Graph, Subgraph, build_graph, induced_subgraph
from .ingest import (
    LabelTable,
    MeshSurface,
    PointCloud,
    mesh_to_graph,
    neighborhood_graph,
    read_edge_list,
    read_obj_mesh,
    read_point_cloud,
    write_edge_list,
)
from .metric import UNREACHABLE, VoronoiDiagram, sssp, voronoi_diagram

__version__ = "0.1.0"
