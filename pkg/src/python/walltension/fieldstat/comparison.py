"""
CurveComparison module
"""

import numpy as np

# Denominator floor in field units
FLOOR = 1e-12


class CurveComparison:
    """
    Maximum relative deviation between two percentile curves over a rank range. The first curve is the reference and
    the denominator, so swapping the curves changes the deviation.
    """

    @staticmethod
    def create(a, b, rankmin=5):
        """
        Compares curve b against reference curve a. The deviation at each rank is |a - b| / max(|a|, floor) and the
        comparison reports the maximum over ranks >= rankmin.

        Args:
            a: reference PercentileCurve
            b: PercentileCurve on the same rank grid
            rankmin: lowest rank compared

        Returns:
            CurveComparison
        """

        if a.ranks.shape != b.ranks.shape or not np.array_equal(a.ranks, b.ranks):
            raise ValueError("Percentile curves have different rank grids")
        if a.units != b.units:
            raise ValueError(f"Percentile curves have different units: {a.units} vs {b.units}")

        mask = a.ranks >= rankmin
        if not mask.any():
            raise ValueError(f"No ranks >= {rankmin} to compare")

        ranks = a.ranks[mask]
        deviations = np.abs(a.values[mask] - b.values[mask]) / np.maximum(np.abs(a.values[mask]), FLOOR)
        index = int(np.argmax(deviations))

        return CurveComparison(ranks, deviations, float(deviations[index]), ranks[index].item())

    def __init__(self, ranks, deviations, deviation, rank):
        """
        Creates a new CurveComparison.

        Args:
            ranks: compared ranks
            deviations: relative deviation at each compared rank
            deviation: maximum relative deviation
            rank: rank where the maximum occurs
        """

        self.ranks = ranks
        self.deviations = deviations
        self.deviation = deviation
        self.rank = rank

    def __repr__(self):
        return f"CurveComparison(ranks={self.ranks[0]}-{self.ranks[-1]}, deviation={self.deviation:.6g}, rank={self.rank})"

    def passes(self, threshold):
        """
        Checks the maximum deviation against a threshold.

        Args:
            threshold: maximum allowed relative deviation

        Returns:
            True if deviation <= threshold
        """

        return self.deviation <= threshold

    def todict(self):
        """
        Converts this comparison to a dictionary.

        Returns:
            dict
        """

        return {
            "rank_min": self.ranks[0].item(),
            "rank_max": self.ranks[-1].item(),
            "max_relative_deviation": self.deviation,
            "rank_at_max": self.rank,
        }
