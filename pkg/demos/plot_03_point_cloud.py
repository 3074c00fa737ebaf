"""
Point clouds through epsilon-graphs
===================================

Two concentric rings cannot be separated by Euclidean k-means, since each
ring surrounds the other's mean. Clustering the epsilon-neighborhood graph
follows the rings instead.
"""

import numpy as np

from graphkmeans import ClusteringConfig, PointCloud, cluster, initialize_centroids, neighborhood_graph

rng = np.random.default_rng(0)
theta = rng.uniform(0, 2 * np.pi, 300)
radius = np.where(np.arange(300) < 150, 1.0, 3.0) + rng.normal(0, 0.05, 300)
points = np.c_[radius * np.cos(theta), radius * np.sin(theta)]
ring = (np.arange(300) >= 150).astype(int)

##############################################################################
# Build the graph. Edges join points closer than epsilon and are weighted by
# their distance, so shortest paths trace the rings.

g = neighborhood_graph(PointCloud(points), epsilon=0.8)
print(g)

##############################################################################
# Pick a seed whose two random centroids fall on different rings, then
# cluster.

seed = next(s for s in range(100) if len({ring[c] for c in initialize_centroids(g, 2, s)}) == 2)
result = cluster(g, ClusteringConfig(k=2, rng_seed=seed))
labels = np.array([-1 if a is None else a for a in result.assignment])
for i in range(2):
    members = labels == i
    print(f"cluster {i}: {members.sum()} points, rings {np.bincount(ring[members], minlength=2)}")

print("unassigned:", len(result.unassigned))

##############################################################################
# For contrast, plain Euclidean Lloyd iterations from the same two seed
# points. The means settle on either side of the origin and each cluster
# takes half of both rings.

means = points[list(initialize_centroids(g, 2, seed))]
for _ in range(50):
    nearest = np.argmin(((points[:, None, :] - means[None]) ** 2).sum(axis=2), axis=1)
    means = np.array([points[nearest == i].mean(axis=0) for i in range(2)])
print("euclidean:", [np.bincount(ring[nearest == i], minlength=2).tolist() for i in range(2)])
