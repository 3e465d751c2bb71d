"""
Field statistics module tests
"""

import unittest

import numpy as np

from walltension.fieldstat import RANKS, ConvergenceReport, CurveComparison, PercentileCurve
from walltension.recovery import SurfaceField


class TestFieldStat(unittest.TestCase):
    """
    Percentile curve, comparison and convergence tests.
    """

    def field(self, values, weights=None, units="N/mm"):
        """
        Builds a test field.

        Args:
            values: vertex values
            weights: vertex weights, defaults to equal weights
            units: units tag

        Returns:
            SurfaceField
        """

        values = np.asarray(values, dtype=np.float64)
        weights = np.ones(values.shape[0]) if weights is None else weights
        return SurfaceField("MPWT_midsurface", values, weights, units)

    def testNearestRank(self):
        """
        Test weighted nearest-rank percentiles
        """

        curve = PercentileCurve.create(self.field([40, 10, 30, 20]), [25, 50, 51, 75, 100])
        self.assertEqual(curve.values.tolist(), [10, 20, 30, 30, 40])
        self.assertEqual(curve.value(50), 20)

        curve = PercentileCurve.create(self.field([1, 3], [0.9, 0.1]), [50, 90, 91, 100])
        self.assertEqual(curve.values.tolist(), [1, 1, 3, 3])

        # Unweighted ranks count vertices equally
        curve = PercentileCurve.create(self.field([1, 3], [0.9, 0.1]), [50, 51], weighted=False)
        self.assertEqual(curve.values.tolist(), [1, 3])

    def testCurveProperties(self):
        """
        Test monotonicity, permutation invariance and scale equivariance
        """

        generator = np.random.default_rng(0)
        values, weights = generator.normal(size=500), generator.uniform(0.1, 2.0, size=500)

        curve = PercentileCurve.create(self.field(values, weights))
        self.assertTrue(np.array_equal(curve.ranks, RANKS))
        self.assertTrue(np.all(np.diff(curve.values) >= 0))
        self.assertEqual(curve.values[-1], values.max())

        order = generator.permutation(500)
        permuted = PercentileCurve.create(self.field(values[order], weights[order]))
        self.assertTrue(np.array_equal(curve.values, permuted.values))

        scaled = PercentileCurve.create(self.field(3.0 * values, weights))
        self.assertTrue(np.allclose(scaled.values, 3.0 * curve.values))
        self.assertTrue(np.allclose(curve.scale(3.0).values, scaled.values))

    def testCurveErrors(self):
        """
        Test invalid curves
        """

        with self.assertRaises(ValueError):
            PercentileCurve.create(self.field([]))

        with self.assertRaises(ValueError):
            PercentileCurve.create(self.field([1, 2], [0, 0]))

        with self.assertRaises(ValueError):
            PercentileCurve([50, 25], [1, 2], "MPa")

        with self.assertRaises(ValueError):
            PercentileCurve([0, 50], [1, 2], "MPa")

        with self.assertRaises(ValueError):
            PercentileCurve([25, 50], [2, 1], "MPa")

        with self.assertRaises(KeyError):
            PercentileCurve([25, 50], [1, 2], "MPa").value(75)

    def testCompare(self):
        """
        Test maximum relative deviation
        """

        a = PercentileCurve(RANKS, np.linspace(1.0, 2.0, 100), "N/mm")

        comparison = CurveComparison.create(a, a)
        self.assertEqual(comparison.deviation, 0.0)
        self.assertTrue(comparison.passes(0.0))

        comparison = CurveComparison.create(a, a.scale(1.1), rankmin=5)
        self.assertAlmostEqual(comparison.deviation, 0.1)
        self.assertEqual(comparison.ranks[0], 5)
        self.assertFalse(comparison.passes(0.05))
        self.assertTrue(comparison.passes(0.11))

        # Deviations are relative to the first curve
        self.assertAlmostEqual(CurveComparison.create(a.scale(1.1), a, rankmin=5).deviation, 0.1 / 1.1)

        data = comparison.todict()
        self.assertEqual(data["rank_min"], 5)
        self.assertEqual(data["rank_max"], 100)
        self.assertIn(data["rank_at_max"], range(5, 101))

    def testCompareRange(self):
        """
        Test ranks below rank_min are ignored
        """

        values = np.linspace(1.0, 2.0, 100)
        other = values.copy()
        other[:4] = 0.5

        comparison = CurveComparison.create(PercentileCurve(RANKS, values, "MPa"), PercentileCurve(RANKS, other, "MPa"), rankmin=5)
        self.assertEqual(comparison.deviation, 0.0)

        comparison = CurveComparison.create(PercentileCurve(RANKS, values, "MPa"), PercentileCurve(RANKS, other, "MPa"), rankmin=1)
        self.assertAlmostEqual(comparison.deviation, 1.0 - 0.5 / values[3])
        self.assertEqual(comparison.rank, 4)

    def testCompareErrors(self):
        """
        Test incompatible curves
        """

        a = PercentileCurve([25, 50, 75], [1, 2, 3], "MPa")

        with self.assertRaises(ValueError):
            CurveComparison.create(a, PercentileCurve([25, 50, 100], [1, 2, 3], "MPa"))

        with self.assertRaises(ValueError):
            CurveComparison.create(a, PercentileCurve([25, 50, 75], [1, 2, 3], "N/mm"))

        with self.assertRaises(ValueError):
            CurveComparison.create(a, a, rankmin=90)

    def testFloor(self):
        """
        Test zero reference values don't divide by zero
        """

        zero = PercentileCurve([50, 100], [0.0, 0.0], "MPa")

        comparison = CurveComparison.create(zero, zero, rankmin=1)
        self.assertEqual(comparison.deviation, 0.0)

        comparison = CurveComparison.create(zero, PercentileCurve([50, 100], [0.0, 1e-6], "MPa"), rankmin=1)
        self.assertTrue(np.isfinite(comparison.deviation))
        self.assertGreater(comparison.deviation, 1.0)

    def testConvergence(self):
        """
        Test refinement ladder deviations
        """

        base = np.linspace(1.0, 2.0, 100)
        curves = {2.0: PercentileCurve(RANKS, base * 1.1, "MPa"), 1.0: PercentileCurve(RANKS, base * 1.01, "MPa"), 0.5: PercentileCurve(RANKS, base, "MPa")}

        report = ConvergenceReport.create(curves, threshold=0.02, rankmin=50)
        self.assertEqual([(row["coarse"], row["fine"]) for row in report.rows], [(2.0, 1.0), (1.0, 0.5)])

        self.assertAlmostEqual(report.rows[0]["deviation"], 0.09 / 1.01)
        self.assertAlmostEqual(report.rows[1]["deviation"], 0.01)
        self.assertFalse(report.rows[0]["passed"])
        self.assertTrue(report.converged())
        self.assertEqual(report.convergedat(), 1.0)
        self.assertTrue(report.monotonic())

        frame = report.dataframe()
        self.assertEqual(list(frame.columns), ["coarse", "fine", "deviation", "rank", "coarse_median", "fine_median", "passed"])
        self.assertEqual(len(frame), 2)

    def testConvergenceIdentical(self):
        """
        Test identical refinements converge with zero deviation
        """

        curve = PercentileCurve(RANKS, np.linspace(1.0, 2.0, 100), "MPa")
        report = ConvergenceReport.create([(1.0, curve), (0.5, curve)])

        self.assertEqual(len(report.rows), 1)
        self.assertEqual(report.rows[0]["deviation"], 0.0)
        self.assertTrue(report.converged())
        self.assertEqual(report.convergedat(), 1.0)

        with self.assertRaises(ValueError):
            ConvergenceReport.create({1.0: curve})
