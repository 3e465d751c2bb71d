"""
Weld module
"""

import numpy as np

from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components
from scipy.spatial import cKDTree


class Weld:
    """
    Merges vertices closer than a tolerance. STL files store three vertices per facet, welding recovers the shared vertex index.
    """

    def __init__(self, tolerance=1e-5):
        """
        Creates a new Weld instance.

        Args:
            tolerance: merge distance in mm
        """

        self.tolerance = tolerance

    def __call__(self, vertices, triangles):
        """
        Welds vertices. The representative of each merged cluster is its first occurrence and clusters are
        numbered in order of first occurrence, which keeps output stable for a fixed input.

        Args:
            vertices: vertex coordinates, shape (n, 3)
            triangles: vertex index triples, shape (m, 3)

        Returns:
            (vertices, triangles) after merging
        """

        vertices = np.asarray(vertices, dtype=np.float64).reshape(-1, 3)
        triangles = np.asarray(triangles, dtype=np.int64).reshape(-1, 3)
        count = vertices.shape[0]

        if not count:
            return vertices, triangles

        # Build graph of vertices within tolerance
        pairs = cKDTree(vertices).query_pairs(self.tolerance, output_type="ndarray") if self.tolerance > 0 else np.zeros((0, 2), dtype=np.int64)
        graph = coo_matrix((np.ones(pairs.shape[0]), (pairs[:, 0], pairs[:, 1])), shape=(count, count))
        _, labels = connected_components(graph, directed=False)

        # Renumber clusters by first occurrence
        _, first = np.unique(labels, return_index=True)
        order = np.argsort(first)
        index = np.empty(order.shape[0], dtype=np.int64)
        index[order] = np.arange(order.shape[0])

        return vertices[first[order]], index[labels][triangles]
