"""
Benchmark surface tests against closed-form thin-walled pressure vessel results
"""

import os
import time
import unittest

import numpy as np

from walltension.app import Application
from walltension.fieldstat import CurveComparison
from walltension.shell import Assembler, Direct

# pylint: disable=C0411
from utils import Utils

# 100 mmHg in MPa
PRESSURE = 100 * 1.33322e-4

# Sphere R = 10 mm at 0.5 mm elements
SPHERE = {"mesh": {"benchmark": "sphere", "radius": 10.0, "edge": 0.5}, "section": {"reference": "mid", "points": 15}}


class TestBenchmark(unittest.TestCase):
    """
    Sphere, cylinder and bumpy sphere benchmark tests.
    """

    @classmethod
    def setUpClass(cls):
        """
        Solves the sphere and cylinder benchmarks.
        """

        cls.path = os.path.join(Utils.PATH, "benchmark")

        start = time.perf_counter()
        cls.sphere = Application(SPHERE).solve()
        cls.seconds = time.perf_counter() - start

        cls.cylinder = Application(
            {"mesh": {"benchmark": "cylinder", "radius": 5.0, "length": 40.0, "edge": 0.5}, "section": {"reference": "mid", "points": 15}}
        ).solve()

    def testSphere(self):
        """
        Test sphere wall tension matches p R / 2
        """

        expected = PRESSURE * 10.0 / 2
        for name in ["MPWT_integrated", "MPWT_midsurface"]:
            curve = self.sphere.curve(name)

            self.assertLess(abs(curve.value(50) - expected) / expected, 0.01, name)
            for rank in range(5, 96):
                self.assertLess(abs(curve.value(rank) - expected) / expected, 0.03, f"{name} rank {rank}")

    def testRuntime(self):
        """
        Test the 0.5 mm sphere solves within a minute
        """

        self.assertGreater(self.sphere.statistics["dofs"], 30000)
        self.assertLess(self.seconds, 60.0)

    def testSphereRadial(self):
        """
        Test sphere radial displacement is uniform
        """

        application = Application({"mesh": {"benchmark": "sphere", "radius": 10.0, "edge": 1.0}, "section": {"reference": "mid"}})
        model = application.model(application.mesh())
        displacements = Direct()(Assembler(model)())

        # Tie-down constraints leave a rigid translation
        u = displacements.translations()
        u = u - u.mean(axis=0)

        normals = model.mesh.vertices / np.linalg.norm(model.mesh.vertices, axis=1)[:, None]
        radial = np.sum(u * normals, axis=1)

        self.assertGreater(radial.mean(), 0)
        self.assertLess(radial.std() / radial.mean(), 0.02)

    def testCylinder(self):
        """
        Test cylinder hoop tension matches p R away from the rims
        """

        bundle = self.cylinder
        interior = np.abs(bundle.mesh.vertices[:, 2]) < 10.0

        expected = PRESSURE * 5.0
        for name in ["MPWT_integrated", "MPWT_midsurface"]:
            tension = bundle.field(name).values[interior]
            self.assertLess(np.abs(tension - expected).max() / expected, 0.03, name)

        self.assertEqual(bundle.statistics["policy"], "rims")
        self.assertEqual(bundle.statistics["rims"], 2)

    def testBoundaryLayer(self):
        """
        Test clamped rims produce a bending boundary layer
        """

        bundle = self.cylinder
        z = np.abs(bundle.mesh.vertices[:, 2])

        difference = np.abs(bundle.field("MPS_inner").values - bundle.field("MPS_outer").values)
        self.assertGreater(difference[z > 19.0].max(), 10 * difference[z < 10.0].mean())

    def testShortcut(self):
        """
        Test mid-surface wall tension agrees with 15 point quadrature
        """

        bumpy = Application({"mesh": {"benchmark": "bumpy", "radius": 10.0, "edge": 0.5}, "section": {"reference": "mid", "points": 15}}).solve()

        for bundle in [self.sphere, self.cylinder, bumpy]:
            self.assertEqual(bundle.statistics["points"], 15)

            comparison = CurveComparison.create(bundle.curve("MPWT_integrated"), bundle.curve("MPWT_midsurface"), 5)
            self.assertLessEqual(comparison.deviation, 0.01, bundle.mesh.provenance)

    def testPoints(self):
        """
        Test 5 through-thickness points agree with 15 points
        """

        application = Application({**SPHERE, "output": os.path.join(self.path, "points")})

        table = application.points([5, 15])
        self.assertEqual(table["points"].tolist(), [5, 15])
        self.assertLessEqual(table["deviation"].iloc[0], 0.002)

    def testMaterial(self):
        """
        Test wall tension doesn't depend on the modulus
        """

        soft = Application({**SPHERE, "material": {"youngs": 1e3}}).solve()

        for name in ["MPWT_integrated", "MPWT_midsurface"]:
            a, b = self.sphere.field(name).values, soft.field(name).values
            self.assertLessEqual(np.max(np.abs(a - b) / np.abs(a)), 1e-6, name)

    def testThickness(self):
        """
        Test sphere wall tension doesn't depend on thickness
        """

        thick = Application({**SPHERE, "section": {"reference": "mid", "points": 15, "thickness": 0.172}}).solve()

        for name in ["MPWT_integrated", "MPWT_midsurface"]:
            a, b = self.sphere.curve(name).value(50), thick.curve(name).value(50)
            self.assertLess(abs(b - a) / a, 0.01, name)

    def testConvergence(self):
        """
        Test refinement reduces successive deviations and converges to p R / 2
        """

        application = Application(
            {"mesh": {"benchmark": "sphere", "radius": 5.0}, "section": {"reference": "mid"}, "output": os.path.join(self.path, "converge")}
        )
        report, table = application.converge([2.0, 1.0, 0.5, 0.25], field="MPWT_midsurface", threshold=0.01, rankmin=50)

        self.assertEqual(table["fine"].tolist(), [1.0, 0.5, 0.25])
        self.assertTrue(report.monotonic())

        expected = PRESSURE * 5.0 / 2
        self.assertLess(abs(report.rows[-1]["fine_median"] - expected) / expected, 0.01)
