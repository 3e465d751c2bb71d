"""
Projector module
"""

import numpy as np

from scipy.spatial import cKDTree


class Projector:
    """
    Closest point queries against a fixed reference surface and its boundary rims. The spatial index is built once over the
    reference triangles, so repeated projection never drifts away from the input geometry.
    """

    def __init__(self, mesh, loops, candidates=16):
        """
        Creates a new Projector.

        Args:
            mesh: reference TriangleMesh
            loops: reference BoundaryLoops
            candidates: number of nearest triangles tested per query point
        """

        self.corners = mesh.corners()
        self.tree = cKDTree(mesh.centroids())
        self.candidates = min(candidates, mesh.trianglecount())
        self.rims = [loop.points(mesh.vertices) for loop in loops]

    def __call__(self, points):
        """
        Projects points onto the reference surface.

        Args:
            points: query points, shape (n, 3)

        Returns:
            closest surface points, shape (n, 3)
        """

        points = np.asarray(points, dtype=np.float64).reshape(-1, 3)
        if not points.shape[0]:
            return points

        _, index = self.tree.query(points, k=self.candidates)
        index = index.reshape(points.shape[0], -1)

        # Closest point on each candidate triangle
        corners = self.corners[index]
        closest = Projector.triangle(points[:, None, :], corners[..., 0, :], corners[..., 1, :], corners[..., 2, :])

        best = np.argmin(np.linalg.norm(closest - points[:, None, :], axis=2), axis=1)
        return closest[np.arange(points.shape[0]), best]

    def distance(self, points):
        """
        Distances from points to the reference surface.

        Args:
            points: query points, shape (n, 3)

        Returns:
            distances, shape (n,)
        """

        points = np.asarray(points, dtype=np.float64).reshape(-1, 3)
        return np.linalg.norm(points - self(points), axis=1)

    def rim(self, points, loops):
        """
        Projects points onto reference rim polylines.

        Args:
            points: query points, shape (n, 3)
            loops: rim index of each point

        Returns:
            closest rim points, shape (n, 3)
        """

        points = np.asarray(points, dtype=np.float64).reshape(-1, 3)
        loops = np.asarray(loops)

        projected = points.copy()
        for x, polyline in enumerate(self.rims):
            mask = loops == x
            if mask.any():
                a, b = polyline, np.roll(polyline, -1, axis=0)
                closest = Projector.segment(points[mask][:, None, :], a[None], b[None])
                best = np.argmin(np.linalg.norm(closest - points[mask][:, None, :], axis=2), axis=1)
                projected[mask] = closest[np.arange(best.shape[0]), best]

        return projected

    @staticmethod
    def segment(p, a, b):
        """
        Closest points on segments ab to points p. Arguments broadcast.

        Args:
            p: points
            a: segment starts
            b: segment ends

        Returns:
            closest points
        """

        ab = b - a
        denominator = np.einsum("...i,...i->...", ab, ab)
        with np.errstate(divide="ignore", invalid="ignore"):
            t = np.einsum("...i,...i->...", p - a, ab) / denominator

        t = np.clip(np.nan_to_num(t), 0.0, 1.0)
        return a + t[..., None] * ab

    @staticmethod
    def triangle(p, a, b, c):
        """
        Closest points on triangles abc to points p, resolved by Voronoi region of the triangle. Arguments broadcast.

        Args:
            p: points
            a: first corners
            b: second corners
            c: third corners

        Returns:
            closest points
        """

        p, a, b, c = np.broadcast_arrays(p, a, b, c)

        def dot(x, y):
            return np.einsum("...i,...i->...", x, y)

        ab, ac, ap, bp, cp = b - a, c - a, p - a, p - b, p - c
        d1, d2 = dot(ab, ap), dot(ac, ap)
        d3, d4 = dot(ab, bp), dot(ac, bp)
        d5, d6 = dot(ab, cp), dot(ac, cp)

        va, vb, vc = d3 * d6 - d5 * d4, d5 * d2 - d1 * d6, d1 * d4 - d3 * d2

        with np.errstate(divide="ignore", invalid="ignore"):
            # Face interior
            total = va + vb + vc
            v, w = np.nan_to_num(vb / total), np.nan_to_num(vc / total)
            result = a + v[..., None] * ab + w[..., None] * ac

            # Edge and vertex regions, lowest priority first
            t = np.nan_to_num((d4 - d3) / ((d4 - d3) + (d5 - d6)))
            result = np.where(((va <= 0) & (d4 - d3 >= 0) & (d5 - d6 >= 0))[..., None], b + t[..., None] * (c - b), result)

            t = np.nan_to_num(d2 / (d2 - d6))
            result = np.where(((vb <= 0) & (d2 >= 0) & (d6 <= 0))[..., None], a + t[..., None] * ac, result)

            result = np.where(((d6 >= 0) & (d5 <= d6))[..., None], c, result)

            t = np.nan_to_num(d1 / (d1 - d3))
            result = np.where(((vc <= 0) & (d1 >= 0) & (d3 <= 0))[..., None], a + t[..., None] * ab, result)

        result = np.where(((d3 >= 0) & (d4 <= d3))[..., None], b, result)
        result = np.where(((d1 <= 0) & (d2 <= 0))[..., None], a, result)

        return result
