"""
BoundaryLoop module
"""

import numpy as np


class BoundaryLoop:
    """
    Closed cycle of boundary edges. On a clipped vessel surface, each loop is a rim where a connecting vessel was cut.
    """

    def __init__(self, vertices, length):
        """
        Creates a new BoundaryLoop.

        Args:
            vertices: ordered vertex indices, consecutive entries share a boundary edge, the last connects back to the first
            length: loop perimeter in mm
        """

        self.vertices = np.asarray(vertices, dtype=np.int64)
        self.length = float(length)

    def __len__(self):
        return self.vertices.shape[0]

    def __repr__(self):
        return f"BoundaryLoop(vertices={len(self)}, length={self.length:.6f})"

    def edges(self):
        """
        Loop edges as consecutive vertex pairs.

        Returns:
            array of shape (k, 2)
        """

        return np.stack([self.vertices, np.roll(self.vertices, -1)], axis=1)

    def points(self, vertices):
        """
        Gets loop coordinates.

        Args:
            vertices: mesh vertex coordinates

        Returns:
            array of shape (k, 3)
        """

        return np.asarray(vertices)[self.vertices]

    def vectorarea(self, vertices):
        """
        Vector area of the polygon spanned by this loop, 0.5 * sum(x_i x x_i+1). For a loop closing off an opening, this is
        the area-weighted normal of the cap.

        Args:
            vertices: mesh vertex coordinates

        Returns:
            vector
        """

        points = self.points(vertices)
        return 0.5 * np.cross(points, np.roll(points, -1, axis=0)).sum(axis=0)
