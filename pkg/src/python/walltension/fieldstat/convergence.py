"""
ConvergenceReport module
"""

import pandas as pd

from .comparison import CurveComparison


class ConvergenceReport:
    """
    Successive deviations across a mesh refinement ladder.
    """

    @staticmethod
    def create(curves, threshold=0.02, rankmin=50):
        """
        Compares each adjacent pair of refinements. The finer curve of each pair is the reference.

        Args:
            curves: dictionary or list of pairs mapping element size (mm) to PercentileCurve
            threshold: convergence threshold on the maximum relative deviation
            rankmin: lowest rank compared

        Returns:
            ConvergenceReport
        """

        curves = sorted(dict(curves).items(), key=lambda x: -x[0])
        if len(curves) < 2:
            raise ValueError("A convergence report needs at least 2 element sizes")

        rows = []
        for (coarse, a), (fine, b) in zip(curves, curves[1:]):
            comparison = CurveComparison.create(b, a, rankmin)
            rows.append(
                {
                    "coarse": coarse,
                    "fine": fine,
                    "deviation": comparison.deviation,
                    "rank": comparison.rank,
                    "coarse_median": a.value(50) if 50 in a.ranks else None,
                    "fine_median": b.value(50) if 50 in b.ranks else None,
                    "passed": comparison.passes(threshold),
                }
            )

        return ConvergenceReport(rows, threshold, rankmin)

    def __init__(self, rows, threshold, rankmin):
        """
        Creates a new ConvergenceReport.

        Args:
            rows: one dictionary per adjacent refinement pair, coarse to fine
            threshold: convergence threshold
            rankmin: lowest rank compared
        """

        self.rows = rows
        self.threshold = threshold
        self.rankmin = rankmin

    def converged(self):
        """
        Checks if the finest pair passes the threshold.

        Returns:
            True if converged
        """

        return self.rows[-1]["passed"]

    def convergedat(self):
        """
        Finds the coarsest element size from which every finer pair passes.

        Returns:
            element size or None if the finest pair fails
        """

        size = None
        for row in reversed(self.rows):
            if not row["passed"]:
                break
            size = row["coarse"]

        return size

    def monotonic(self):
        """
        Checks if deviations decrease with every refinement.

        Returns:
            True if deviations are strictly decreasing
        """

        deviations = [row["deviation"] for row in self.rows]
        return all(x > y for x, y in zip(deviations, deviations[1:]))

    def dataframe(self):
        """
        Converts this report to a DataFrame, one row per refinement pair.

        Returns:
            pandas.DataFrame
        """

        return pd.DataFrame(self.rows, columns=["coarse", "fine", "deviation", "rank", "coarse_median", "fine_median", "passed"])
