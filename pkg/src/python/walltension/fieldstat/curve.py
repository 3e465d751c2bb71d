"""
PercentileCurve module
"""

import numpy as np
import pandas as pd

# Default rank grid, integer percentiles 1..100
RANKS = np.arange(1, 101)


class PercentileCurve:
    """
    Maps percentile ranks to field values. Curves compare fields that live on different meshes.
    """

    @staticmethod
    def create(field, ranks=None, weighted=True):
        """
        Computes the percentile curve of a surface field using the weighted nearest-rank rule. Values are sorted ascending
        with cumulative normalized weights, rank q maps to the first value with cumulative weight >= q / 100.

        Args:
            field: SurfaceField
            ranks: percentile ranks in (0, 100], defaults to 1..100
            weighted: uses the field's area weights if True, counts every vertex equally otherwise

        Returns:
            PercentileCurve
        """

        values = np.asarray(field.values, dtype=np.float64)
        if not values.size:
            raise ValueError(f"Field {field.name} is empty")

        weights = np.asarray(field.weights, dtype=np.float64) if weighted else np.ones(values.shape[0])
        if weights.shape != values.shape or np.any(weights < 0) or weights.sum() <= 0:
            raise ValueError(f"Field {field.name} has invalid weights")

        ranks = RANKS if ranks is None else np.asarray(ranks)

        order = np.argsort(values, kind="stable")
        cumulative = np.cumsum(weights[order])
        cumulative /= cumulative[-1]
        cumulative[-1] = 1.0

        index = np.searchsorted(cumulative, ranks / 100.0 - 1e-12, side="left")
        index = np.clip(index, 0, values.shape[0] - 1)

        return PercentileCurve(ranks, values[order][index], field.units, field.name)

    def __init__(self, ranks, values, units, name=None):
        """
        Creates a new PercentileCurve.

        Args:
            ranks: strictly increasing percentile ranks in (0, 100]
            values: non-decreasing values at each rank
            units: units tag
            name: optional field name
        """

        self.ranks = np.asarray(ranks)
        self.values = np.asarray(values, dtype=np.float64)
        self.units = units
        self.name = name

        if self.ranks.shape != self.values.shape or not self.ranks.size:
            raise ValueError("Ranks and values must be non-empty and of equal length")
        if np.any(self.ranks <= 0) or np.any(self.ranks > 100) or np.any(np.diff(self.ranks) <= 0):
            raise ValueError("Ranks must be strictly increasing within (0, 100]")
        if np.any(np.diff(self.values) < 0):
            raise ValueError("Percentile values must be non-decreasing")

    def __repr__(self):
        return f"PercentileCurve(name={self.name}, ranks={self.ranks.size}, units={self.units})"

    def value(self, rank):
        """
        Gets the value at rank.

        Args:
            rank: percentile rank on this curve's grid

        Returns:
            value
        """

        index = np.flatnonzero(self.ranks == rank)
        if not index.size:
            raise KeyError(f"Rank {rank} is not on this curve's grid")

        return float(self.values[index[0]])

    def scale(self, factor):
        """
        Multiplies every value by a positive factor.

        Args:
            factor: scale factor > 0

        Returns:
            PercentileCurve
        """

        return PercentileCurve(self.ranks, self.values * factor, self.units, self.name)

    def dataframe(self):
        """
        Converts this curve to a DataFrame with rank, value and units columns.

        Returns:
            pandas.DataFrame
        """

        return pd.DataFrame({"rank": self.ranks, "value": self.values, "units": self.units})
