"""
Centrality on a small graph
===========================

Compare the centrality measures graphkmeans ships with on a graph made of
a dense core and a long tail.
"""

import numpy as np

from graphkmeans import Graph, compute_centrality
from graphkmeans.centrality import MEASURES

##############################################################################
# A 5-clique (nodes 0-4) with a 4-node tail hanging off node 4.

edges = [(u, v) for u in range(5) for v in range(u + 1, 5)]
edges += [(4, 5), (5, 6), (6, 7), (7, 8)]
g = Graph(9, edges)

##############################################################################
# Every measure is available by name. PageRank sums to one; the others are on
# their own scales, so we print each normalised by its maximum.

np.set_printoptions(precision=3, suppress=True)
for name in sorted(MEASURES):
    scores = compute_centrality(g, name).values
    print(f"{name:12s}", scores / scores.max(), "argmax:", int(np.argmax(scores)))

##############################################################################
# Node 4, the clique node that also links to the tail, wins under every
# measure. That node is what the clustering update step would elect as the
# centroid of this whole graph.
