"""
TriangleMesh module
"""

import numpy as np

from .errors import MeshError

# Triangles with an area below this threshold (mm^2) are considered degenerate
DEGENERATE = 1e-12


class TriangleMesh:
    """
    Indexed triangle surface mesh. Lengths are in millimetres. Instances are immutable, operations return new meshes.
    """

    def __init__(self, vertices, triangles, provenance=None):
        """
        Creates a new TriangleMesh.

        Args:
            vertices: vertex coordinates, shape (n, 3)
            triangles: vertex index triples, shape (m, 3)
            provenance: free-text source label
        """

        self.vertices = np.array(vertices, dtype=np.float64).reshape(-1, 3)
        self.triangles = np.array(triangles, dtype=np.int64).reshape(-1, 3)
        self.provenance = provenance if provenance else ""

        # Freeze arrays
        self.vertices.flags.writeable = False
        self.triangles.flags.writeable = False

    def __repr__(self):
        return f"TriangleMesh(vertices={self.vertexcount()}, triangles={self.trianglecount()}, provenance='{self.provenance}')"

    def vertexcount(self):
        """
        Number of vertices.

        Returns:
            vertex count
        """

        return self.vertices.shape[0]

    def trianglecount(self):
        """
        Number of triangles.

        Returns:
            triangle count
        """

        return self.triangles.shape[0]

    def update(self, vertices=None, triangles=None, provenance=None):
        """
        Creates a copy of this mesh with selected components replaced.

        Args:
            vertices: new vertex coordinates
            triangles: new triangles
            provenance: new provenance label

        Returns:
            TriangleMesh
        """

        return TriangleMesh(
            self.vertices if vertices is None else vertices,
            self.triangles if triangles is None else triangles,
            self.provenance if provenance is None else provenance,
        )

    def corners(self):
        """
        Gets triangle corner coordinates.

        Returns:
            array of shape (m, 3, 3) - triangle, corner, coordinate
        """

        return self.vertices[self.triangles]

    def crosses(self):
        """
        Unnormalized triangle normals, (v1 - v0) x (v2 - v0). Length is twice the triangle area.

        Returns:
            array of shape (m, 3)
        """

        corners = self.corners()
        return np.cross(corners[:, 1] - corners[:, 0], corners[:, 2] - corners[:, 0])

    def areas(self):
        """
        Triangle areas.

        Returns:
            array of shape (m,)
        """

        return 0.5 * np.linalg.norm(self.crosses(), axis=1)

    def area(self):
        """
        Total surface area.

        Returns:
            area in mm^2
        """

        return float(self.areas().sum())

    def normals(self):
        """
        Unit triangle normals following the triangle winding.

        Returns:
            array of shape (m, 3)
        """

        crosses = self.crosses()
        lengths = np.linalg.norm(crosses, axis=1)
        lengths[lengths == 0] = 1.0
        return crosses / lengths[:, None]

    def centroids(self):
        """
        Triangle centroids.

        Returns:
            array of shape (m, 3)
        """

        return self.corners().mean(axis=1)

    def centroid(self):
        """
        Mean of the vertex coordinates.

        Returns:
            point
        """

        return self.vertices.mean(axis=0)

    def volume(self):
        """
        Signed enclosed volume. Positive for a closed surface with outward normals.

        Returns:
            volume in mm^3
        """

        corners = self.corners()
        return float(np.einsum("ij,ij->i", corners[:, 0], np.cross(corners[:, 1], corners[:, 2])).sum() / 6.0)

    def edges(self):
        """
        Unique undirected edges, each sorted by vertex index.

        Returns:
            array of shape (k, 2)
        """

        pairs = np.sort(self.triangles[:, [0, 1, 1, 2, 2, 0]].reshape(-1, 2), axis=1)
        return np.unique(pairs, axis=0)

    def edgelengths(self):
        """
        Lengths of the unique undirected edges.

        Returns:
            array of shape (k,)
        """

        edges = self.edges()
        return np.linalg.norm(self.vertices[edges[:, 1]] - self.vertices[edges[:, 0]], axis=1)

    def angles(self):
        """
        Interior triangle angles at each corner.

        Returns:
            array of shape (m, 3) in radians
        """

        corners = self.corners()
        angles = np.zeros((corners.shape[0], 3))
        for x in range(3):
            a = corners[:, (x + 1) % 3] - corners[:, x]
            b = corners[:, (x + 2) % 3] - corners[:, x]
            cross = np.linalg.norm(np.cross(a, b), axis=1)
            angles[:, x] = np.arctan2(cross, np.einsum("ij,ij->i", a, b))

        return angles

    def vertexareas(self):
        """
        Vertex areas as one third of the incident triangle areas. Sums to the total surface area.

        Returns:
            array of shape (n,)
        """

        weights = np.zeros(self.vertexcount())
        np.add.at(weights, self.triangles.reshape(-1), np.repeat(self.areas() / 3.0, 3))
        return weights

    def vertexnormals(self):
        """
        Unit vertex normals, computed as the angle-weighted average of incident triangle normals.

        Returns:
            array of shape (n, 3)
        """

        normals, angles = self.normals(), self.angles()

        sums = np.zeros((self.vertexcount(), 3))
        for x in range(3):
            np.add.at(sums, self.triangles[:, x], normals * angles[:, x, None])

        lengths = np.linalg.norm(sums, axis=1)
        invalid = np.flatnonzero(lengths < 1e-12)
        if invalid.size:
            raise MeshError(
                f"Zero-length normal at {invalid.size} vertex(es), isolated or degenerate",
                [f"vertex {x}" for x in invalid[:20]],
            )

        return sums / lengths[:, None]

    def offset(self, distance):
        """
        Moves every vertex along its vertex normal. Connectivity is unchanged.

        Args:
            distance: offset distance in mm, positive along the normals

        Returns:
            TriangleMesh
        """

        if distance == 0:
            return self.update()

        vertices = self.vertices + distance * self.vertexnormals()
        mesh = self.update(vertices=vertices)

        # Detect triangles that turned inside out
        inverted = np.flatnonzero(np.einsum("ij,ij->i", self.crosses(), mesh.crosses()) <= 0)
        if inverted.size:
            raise MeshError(
                f"Offset of {distance} mm inverted {inverted.size} triangle(s)",
                [f"triangle {x}" for x in inverted[:20]],
            )

        return mesh

    def flip(self):
        """
        Reverses the winding of every triangle.

        Returns:
            TriangleMesh
        """

        return self.update(triangles=self.triangles[:, [0, 2, 1]])

    def transform(self, rotation=None, translation=None):
        """
        Applies a rigid transform x' = R x + t.

        Args:
            rotation: 3x3 rotation matrix
            translation: translation vector

        Returns:
            TriangleMesh
        """

        vertices = self.vertices
        if rotation is not None:
            vertices = vertices @ np.asarray(rotation, dtype=np.float64).T
        if translation is not None:
            vertices = vertices + np.asarray(translation, dtype=np.float64)

        return self.update(vertices=vertices)

    def compact(self):
        """
        Drops vertices not referenced by any triangle and renumbers the remaining ones in order.

        Returns:
            TriangleMesh
        """

        used = np.zeros(self.vertexcount(), dtype=bool)
        used[self.triangles.reshape(-1)] = True

        index = np.full(self.vertexcount(), -1, dtype=np.int64)
        index[used] = np.arange(used.sum())

        return self.update(vertices=self.vertices[used], triangles=index[self.triangles])

    def euler(self):
        """
        Euler characteristic V - E + F over referenced vertices.

        Returns:
            int
        """

        vertices = np.unique(self.triangles.reshape(-1)).shape[0]
        return int(vertices - self.edges().shape[0] + self.trianglecount())
