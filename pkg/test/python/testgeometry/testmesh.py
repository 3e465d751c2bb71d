"""
TriangleMesh module tests
"""

import unittest

import numpy as np

from walltension.geometry import Generator, MeshError, TriangleMesh, Weld

# pylint: disable=C0411
from utils import Utils


class TestMesh(unittest.TestCase):
    """
    TriangleMesh tests.
    """

    @classmethod
    def setUpClass(cls):
        """
        Builds shared meshes.
        """

        cls.cube = Utils.cube()
        cls.sphere = Generator.icosphere(10.0, 1.0)

    def testArrays(self):
        """
        Test vertex and triangle arrays are frozen and typed
        """

        self.assertEqual(self.cube.vertices.dtype, np.float64)
        self.assertEqual(self.cube.triangles.dtype, np.int64)

        with self.assertRaises(ValueError):
            self.cube.vertices[0, 0] = 5.0

        self.assertEqual(self.cube.vertexcount(), 8)
        self.assertEqual(self.cube.trianglecount(), 12)
        self.assertIn("cube", repr(self.cube))

    def testAreas(self):
        """
        Test triangle and vertex areas
        """

        self.assertTrue(np.allclose(self.cube.areas(), 0.5))
        self.assertAlmostEqual(self.cube.area(), 6.0)
        self.assertAlmostEqual(self.cube.vertexareas().sum(), 6.0)
        self.assertAlmostEqual(self.sphere.vertexareas().sum(), self.sphere.area())

    def testCompact(self):
        """
        Test unreferenced vertices are dropped
        """

        mesh = TriangleMesh([[9, 9, 9], [0, 0, 0], [1, 0, 0], [0, 1, 0]], [[1, 2, 3]])
        compact = mesh.compact()

        self.assertEqual(compact.vertexcount(), 3)
        self.assertEqual(compact.triangles.tolist(), [[0, 1, 2]])

    def testEuler(self):
        """
        Test Euler characteristic of closed and open surfaces
        """

        self.assertEqual(self.cube.euler(), 2)
        self.assertEqual(self.sphere.euler(), 2)
        self.assertEqual(Generator.cylinder(5.0, 10.0, 1.0).euler(), 0)
        self.assertEqual(Generator.plate(1.0, 1.0, 0.25).euler(), 1)

    def testFlip(self):
        """
        Test flipping reverses normals and volume sign
        """

        flipped = self.cube.flip()
        self.assertTrue(np.allclose(flipped.normals(), -self.cube.normals()))
        self.assertAlmostEqual(self.cube.volume(), 1.0)
        self.assertAlmostEqual(flipped.volume(), -1.0)

    def testNormals(self):
        """
        Test outward unit normals
        """

        normals = self.cube.normals()
        self.assertTrue(np.allclose(np.linalg.norm(normals, axis=1), 1.0))

        # Bottom face points down, top face points up
        self.assertTrue(np.allclose(normals[0], [0, 0, -1]))
        self.assertTrue(np.allclose(normals[2], [0, 0, 1]))

    def testOffset(self):
        """
        Test offsetting along vertex normals
        """

        mesh = self.sphere.offset(0.5)
        radii = np.linalg.norm(mesh.vertices, axis=1)
        self.assertTrue(np.allclose(radii, 10.5))
        self.assertTrue(np.array_equal(mesh.triangles, self.sphere.triangles))

        self.assertIsNot(self.sphere.offset(0), self.sphere)

    def testOffsetInverted(self):
        """
        Test an inward offset past the center fails
        """

        with self.assertRaises(MeshError) as context:
            Generator.icosphere(1.0, 0.5).offset(-2.0)

        self.assertTrue(context.exception.diagnostics)

    def testTransform(self):
        """
        Test rigid transforms preserve areas
        """

        angle = 0.3
        rotation = np.array([[np.cos(angle), -np.sin(angle), 0], [np.sin(angle), np.cos(angle), 0], [0, 0, 1]])
        mesh = self.cube.transform(rotation, [1, 2, 3])

        self.assertTrue(np.allclose(mesh.areas(), self.cube.areas()))
        self.assertTrue(np.allclose(mesh.centroid(), rotation @ self.cube.centroid() + [1, 2, 3]))

    def testVertexNormals(self):
        """
        Test vertex normals on a sphere match radial directions
        """

        normals = self.sphere.vertexnormals()
        radial = self.sphere.vertices / np.linalg.norm(self.sphere.vertices, axis=1)[:, None]

        errors = np.arccos(np.clip(np.einsum("ij,ij->i", normals, radial), -1.0, 1.0))
        self.assertLess(errors.max(), 1e-2)

    def testVertexNormalsIsolated(self):
        """
        Test an isolated vertex has no normal
        """

        mesh = TriangleMesh([[0, 0, 0], [1, 0, 0], [0, 1, 0], [5, 5, 5]], [[0, 1, 2]])
        with self.assertRaises(MeshError):
            mesh.vertexnormals()

    def testWeld(self):
        """
        Test welding merges coincident vertices in order of first occurrence
        """

        vertices = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [1e-7, 0, 0], [0, 1, 0], [1, 1, 0]]
        triangles = [[0, 1, 2], [3, 5, 4]]

        vertices, triangles = Weld(1e-5)(vertices, triangles)
        self.assertEqual(vertices.shape[0], 4)
        self.assertEqual(triangles.tolist(), [[0, 1, 2], [0, 3, 2]])

        # Zero tolerance keeps every vertex
        vertices, _ = Weld(0)([[0, 0, 0], [0, 0, 0], [1, 0, 0]], [[0, 1, 2]])
        self.assertEqual(vertices.shape[0], 3)
