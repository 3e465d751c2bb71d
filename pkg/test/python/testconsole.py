"""
Console module tests
"""

import contextlib
import io
import json
import os
import unittest

import numpy as np

from walltension.console.__main__ import main
from walltension.fieldstat import PercentileCurve
from walltension.geometry import Generator
from walltension.io import CSV, STL

# pylint: disable=C0411
from utils import Utils

CONFIG = """
mesh:
    benchmark: sphere
    radius: 5.0
    edge: 1.5
section:
    reference: mid
clamp:
    policy: %s
"""


class TestConsole(unittest.TestCase):
    """
    Console tests.
    """

    @classmethod
    def setUpClass(cls):
        """
        Create input files.
        """

        cls.path = os.path.join(Utils.PATH, "console")
        os.makedirs(cls.path, exist_ok=True)

        cls.cube = os.path.join(cls.path, "cube.stl")
        STL().save(Utils.cube(), cls.cube)

        cls.nonmanifold = os.path.join(cls.path, "nonmanifold.stl")
        with open(cls.nonmanifold, "w", encoding="utf-8") as f:
            f.write("solid test\n")
            for apex in [[0, 1, 0], [0, -1, 0], [0, 0, 1]]:
                f.write("facet normal 0 0 1\nouter loop\nvertex 0 0 0\nvertex 1 0 0\n")
                f.write(f"vertex {apex[0]} {apex[1]} {apex[2]}\nendloop\nendfacet\n")
            f.write("endsolid test\n")

        ranks = np.arange(1, 101)
        values = 0.01 + 0.0001 * ranks

        cls.a, cls.b = os.path.join(cls.path, "a.csv"), os.path.join(cls.path, "b.csv")
        CSV().save(PercentileCurve(ranks, values, "N/mm"), cls.a)
        CSV().save(PercentileCurve(ranks, 1.1 * values, "N/mm"), cls.b)

        cls.config, cls.unconstrained = os.path.join(cls.path, "config.yml"), os.path.join(cls.path, "unconstrained.yml")
        with open(cls.config, "w", encoding="utf-8") as f:
            f.write(CONFIG % "auto")
        with open(cls.unconstrained, "w", encoding="utf-8") as f:
            f.write(CONFIG % "explicit")

    def testInspect(self):
        """
        Test inspect command
        """

        code, output = self.command(["inspect", self.cube, "--json"])
        self.assertEqual(code, 0)

        report = json.loads(output)
        self.assertEqual(report["triangle_count"], 12)
        self.assertEqual(report["euler"], 2)
        self.assertTrue(report["watertight"])

        code, output = self.command(["inspect", self.cube])
        self.assertEqual(code, 0)
        self.assertIn("boundary_loop_count", output)

    def testMeshError(self):
        """
        Test mesh validation errors exit with code 2
        """

        code, _ = self.command(["inspect", self.nonmanifold])
        self.assertEqual(code, 2)

    def testIOError(self):
        """
        Test missing files and bad arguments exit with code 1
        """

        code, _ = self.command(["inspect", os.path.join(self.path, "missing.stl")])
        self.assertEqual(code, 1)

        code, _ = self.command(["solve"])
        self.assertEqual(code, 1)

        code, _ = self.command(["unknown"])
        self.assertEqual(code, 1)

        code, _ = self.command(["generate", "torus", os.path.join(self.path, "torus.stl")])
        self.assertEqual(code, 1)

    def testCompare(self):
        """
        Test compare command
        """

        code, output = self.command(["compare", self.a, self.a, "--json"])
        self.assertEqual(code, 0)

        result = json.loads(output)
        self.assertEqual(result["max_relative_deviation"], 0.0)
        self.assertTrue(result["passed"])

        code, _ = self.command(["compare", self.a, self.b, "--threshold", "0.05"])
        self.assertEqual(code, 4)

        code, _ = self.command(["compare", self.a, self.b, "--threshold", "0.2"])
        self.assertEqual(code, 0)

    def testSolve(self):
        """
        Test solve command
        """

        output = os.path.join(self.path, "solve")
        code, summary = self.command(["solve", "--config", self.config, "--out", output, "--deterministic", "--json"])
        self.assertEqual(code, 0)

        summary = json.loads(summary)
        self.assertGreater(summary["max_mpwt"], 0)
        self.assertEqual(summary["policy"], "tiedown")

        for name in ["wall.vtk", "mpwt_integrated.csv", "mpwt_midsurface.csv", "summary.json"]:
            self.assertTrue(os.path.exists(os.path.join(output, name)))

    def testPressure(self):
        """
        Test pressure override scales results
        """

        results = []
        for value in ["100", "200"]:
            output = os.path.join(self.path, f"pressure{value}")
            code, summary = self.command(["solve", "--config", self.config, "--out", output, "--pressure", value, "mmHg", "--json"])
            self.assertEqual(code, 0)
            results.append(json.loads(summary)["max_mpwt"])

        self.assertAlmostEqual(results[1] / results[0], 2.0, places=6)

        code, _ = self.command(["solve", "--config", self.config, "--pressure", "100", "psi"])
        self.assertEqual(code, 1)

    def testSingular(self):
        """
        Test unconstrained models exit with code 3
        """

        code, _ = self.command(["solve", "--config", self.unconstrained, "--out", os.path.join(self.path, "singular")])
        self.assertEqual(code, 3)

    def testConverge(self):
        """
        Test converge command
        """

        code, _ = self.command(["converge", "--config", self.config, "--sizes", "1.0"])
        self.assertEqual(code, 1)

    def testRemesh(self):
        """
        Test remesh command
        """

        path, output = os.path.join(self.path, "sphere.stl"), os.path.join(self.path, "remeshed.stl")
        STL().save(Generator.icosphere(5.0, 1.0), path)

        code, text = self.command(["remesh", path, "--target", "1.5", "--out", output, "--iterations", "2"])
        self.assertEqual(code, 0)
        self.assertIn("triangle_count", text)
        self.assertTrue(os.path.exists(output))

    def testGenerate(self):
        """
        Test generate command
        """

        path = os.path.join(self.path, "generated.stl")
        code, _ = self.command(["generate", "cylinder", path, "--edge", "2.0"])

        self.assertEqual(code, 0)
        self.assertEqual(len(STL().load(path).vertices) % 16, 0)

    def command(self, argv):
        """
        Runs a console command.

        Args:
            argv: command arguments

        Returns:
            (exit code, standard output)
        """

        output, errors = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(output), contextlib.redirect_stderr(errors):
            code = main(argv)

        return code, output.getvalue()
