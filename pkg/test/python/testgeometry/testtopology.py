"""
Topology module tests
"""

import time
import unittest

import numpy as np

from walltension.geometry import Generator, MeshError, MeshQualityReport, NonManifoldError, OrientationError, Topology, TriangleMesh

# pylint: disable=C0411
from utils import Utils


class TestTopology(unittest.TestCase):
    """
    Topology tests.
    """

    @classmethod
    def setUpClass(cls):
        """
        Builds shared meshes.
        """

        cls.cube = Utils.cube()
        cls.tube = Generator.cylinder(5.0, 20.0, 1.0)

    def testClosed(self):
        """
        Test a watertight surface has no rims
        """

        topology = Topology(self.cube)

        self.assertTrue(topology.closed())
        self.assertTrue(topology.oriented())
        self.assertEqual(topology.loops(), [])
        self.assertEqual(topology.components()[0], 1)
        self.assertEqual(topology.boundaryvertices().size, 0)

    def testLoops(self):
        """
        Test rim detection on an open tube
        """

        loops = Topology(self.tube).loops()
        self.assertEqual(len(loops), 2)

        # Rims are the two end rings of a tube centered at the origin
        around = len(loops[0])
        perimeter = 2 * around * 5.0 * np.sin(np.pi / around)
        for loop in loops:
            self.assertEqual(len(loop), around)
            self.assertAlmostEqual(loop.length, perimeter)

            z = loop.points(self.tube.vertices)[:, 2]
            self.assertTrue(np.allclose(z, z[0]))
            self.assertAlmostEqual(abs(z[0]), 10.0)

        self.assertEqual(loops[0].edges().shape, (around, 2))

    def testLoopOrder(self):
        """
        Test loops are sorted by descending perimeter
        """

        loops = Topology(Generator.bifurcation(10.0, 1.0, 30.0)).loops()
        self.assertEqual(len(loops), 3)

        lengths = [loop.length for loop in loops]
        self.assertEqual(lengths, sorted(lengths, reverse=True))

    def testPlate(self):
        """
        Test a flat patch has a single square rim
        """

        loops = Topology(Generator.plate(1.0, 1.0, 0.25)).loops()

        self.assertEqual(len(loops), 1)
        self.assertAlmostEqual(loops[0].length, 4.0)
        self.assertEqual(len(loops[0]), 16)

    def testNonManifold(self):
        """
        Test three triangles on one edge are rejected
        """

        mesh = TriangleMesh([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1]], [[0, 1, 2], [1, 0, 3], [0, 1, 4]])

        with self.assertRaises(NonManifoldError) as context:
            Topology(mesh).validate()

        self.assertEqual(context.exception.edges, [(0, 1)])
        self.assertEqual(context.exception.diagnostics, ["edge 0-1"])

        with self.assertRaises(MeshError):
            Topology(mesh).loops()

    def testOrient(self):
        """
        Test orientation repairs flipped triangles and points normals outward
        """

        triangles = self.cube.triangles.copy()
        triangles[3] = triangles[3][[0, 2, 1]]
        broken = TriangleMesh(self.cube.vertices, triangles)
        self.assertFalse(Topology(broken).oriented())

        oriented = Topology(broken).orient()
        self.assertTrue(Topology(oriented).oriented())
        self.assertAlmostEqual(oriented.volume(), 1.0)

        # Inward surfaces are reversed, flip requests the opposite
        self.assertAlmostEqual(Topology(self.cube.flip()).orient().volume(), 1.0)
        self.assertAlmostEqual(Topology(self.cube).orient(flip=True).volume(), -1.0)

    def testOrientOpen(self):
        """
        Test open surfaces are oriented away from their centroid
        """

        sphere = Generator.blob(3.0, 0.5)
        inward = sphere.flip()

        oriented = Topology(inward).orient()
        self.assertTrue(np.array_equal(oriented.triangles, sphere.triangles))

        oriented = Topology(self.tube.flip()).orient()
        centroids = oriented.centroids()
        radial = np.einsum("ij,ij->i", oriented.normals()[:, :2], centroids[:, :2])
        self.assertTrue(np.all(radial > 0))

    def testOrientMobius(self):
        """
        Test a non-orientable strip is rejected
        """

        with self.assertRaises(OrientationError):
            Topology(Utils.mobius()).orient()

    def testOrientComponents(self):
        """
        Test each component is oriented on its own
        """

        vertices = np.concatenate([self.cube.vertices, self.cube.vertices + 3.0])
        triangles = np.concatenate([self.cube.triangles, self.cube.flip().triangles + 8])
        triangles[2] = triangles[2][[0, 2, 1]]

        oriented = Topology(TriangleMesh(vertices, triangles)).orient()
        self.assertTrue(Topology(oriented).oriented())
        self.assertAlmostEqual(oriented.volume(), 2.0)

    def testOrientLarge(self):
        """
        Test orienting a large randomly flipped surface
        """

        sphere = Generator.geodesic(10.0, 80)
        self.assertEqual(sphere.trianglecount(), 128000)

        flipped = np.random.default_rng(0).random(sphere.trianglecount()) < 0.5
        triangles = sphere.triangles.copy()
        triangles[flipped] = triangles[flipped][:, [0, 2, 1]]

        start = time.perf_counter()
        oriented = Topology(TriangleMesh(sphere.vertices, triangles)).orient()
        elapsed = time.perf_counter() - start

        self.assertTrue(np.array_equal(oriented.triangles, sphere.triangles))
        self.assertLess(elapsed, 10.0)

    def testQuality(self):
        """
        Test quality report fields
        """

        report = MeshQualityReport.create(self.cube)
        data = report.todict()

        self.assertEqual(list(data), MeshQualityReport.FIELDS)
        self.assertEqual(data["vertex_count"], 8)
        self.assertEqual(data["triangle_count"], 12)
        self.assertEqual(data["boundary_loop_count"], 0)
        self.assertEqual(data["component_count"], 1)
        self.assertEqual(data["euler"], 2)
        self.assertTrue(data["watertight"])
        self.assertAlmostEqual(data["min_angle"], 45.0)
        self.assertAlmostEqual(data["min_edge_length"], 1.0)
        self.assertAlmostEqual(data["max_edge_length"], np.sqrt(2.0))
        self.assertIn("watertight=True", repr(report))

        report = MeshQualityReport.create(self.tube)
        self.assertEqual(report.boundary_loop_count, 2)
        self.assertFalse(report.watertight)

    def testValidate(self):
        """
        Test invariant checks
        """

        Topology(self.cube).validate()

        with self.assertRaises(MeshError):
            Topology(TriangleMesh([[0, 0, 0], [1, 0, 0], [0, 1, 0]], [[0, 1, 5]])).validate()

        with self.assertRaises(MeshError):
            Topology(TriangleMesh([[0, 0, 0], [1, 0, 0], [0, 1, 0]], [[0, 1, 1]])).validate()

        with self.assertRaises(MeshError):
            Topology(TriangleMesh([[0, 0, 0], [1, 0, 0], [2, 0, 0]], [[0, 1, 2]])).validate()

        triangles = self.cube.triangles.copy()
        triangles[0] = triangles[0][[0, 2, 1]]
        with self.assertRaises(MeshError) as context:
            Topology(TriangleMesh(self.cube.vertices, triangles)).validate()

        self.assertIn("winding", str(context.exception))
