"""
Utils module
"""

import numpy as np

from walltension.geometry import TriangleMesh


class Utils:
    """
    Utility constants and methods
    """

    PATH = "/tmp/walltension"

    @staticmethod
    def cube():
        """
        Unit cube with outward winding.

        Returns:
            TriangleMesh
        """

        vertices = [[0, 0, 0], [1, 0, 0], [1, 1, 0], [0, 1, 0], [0, 0, 1], [1, 0, 1], [1, 1, 1], [0, 1, 1]]
        triangles = [[0, 2, 1], [0, 3, 2], [4, 5, 6], [4, 6, 7], [0, 1, 5], [0, 5, 4], [2, 3, 7], [2, 7, 6], [1, 2, 6], [1, 6, 5], [3, 0, 4], [3, 4, 7]]

        return TriangleMesh(vertices, triangles, "cube")

    @staticmethod
    def mobius(count=12, radius=2.0, width=0.3):
        """
        Moebius strip, a manifold surface that can't be oriented.

        Args:
            count: number of segments
            radius: center line radius
            width: half width

        Returns:
            TriangleMesh
        """

        vertices = []
        for k in range(count):
            theta = 2.0 * np.pi * k / count
            center = np.array([radius * np.cos(theta), radius * np.sin(theta), 0.0])
            direction = np.cos(theta / 2.0) * np.array([np.cos(theta), np.sin(theta), 0.0]) + np.sin(theta / 2.0) * np.array([0.0, 0.0, 1.0])
            vertices.extend([center - width * direction, center + width * direction])

        triangles = []
        for k in range(count):
            a, b = 2 * k, 2 * k + 1
            c, d = (2 * (k + 1), 2 * (k + 1) + 1) if k < count - 1 else (1, 0)
            triangles.extend([[a, c, d], [a, d, b]])

        return TriangleMesh(vertices, triangles, "mobius")

    @staticmethod
    def modes(points, center=None):
        """
        Six rigid-body displacement modes of a point set, 6 degrees of freedom per point.

        Args:
            points: point coordinates, shape (n, 3)
            center: rotation center, defaults to the origin

        Returns:
            array with shape (6, 6n)
        """

        points = np.asarray(points, dtype=np.float64)
        arms = points - (np.zeros(3) if center is None else center)

        modes = []
        for axis in np.eye(3):
            values = np.zeros((points.shape[0], 6))
            values[:, :3] = axis
            modes.append(values.reshape(-1))

        for axis in np.eye(3):
            values = np.zeros((points.shape[0], 6))
            values[:, :3] = np.cross(axis, arms)
            values[:, 3:] = axis
            modes.append(values.reshape(-1))

        return np.array(modes)
