"""
CSV module
"""

import logging

import numpy as np
import pandas as pd

from ..fieldstat import PercentileCurve
from .base import Format
from .errors import MeshFormatError

# Logging configuration
logger = logging.getLogger(__name__)


class CSV(Format):
    """
    Percentile curve files with a rank,value,units header.
    """

    # Required columns
    COLUMNS = ["rank", "value", "units"]

    def load(self, path):
        """
        Loads a percentile curve.

        Args:
            path: input file path

        Returns:
            PercentileCurve
        """

        try:
            frame = pd.read_csv(path)
        except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
            raise MeshFormatError(f"Unable to read curve file '{path}': {e}") from e

        if list(frame.columns) != CSV.COLUMNS:
            raise MeshFormatError(f"'{path}' must have columns {','.join(CSV.COLUMNS)}, found {','.join(str(x) for x in frame.columns)}")

        units = frame["units"].unique()
        if len(units) != 1:
            raise MeshFormatError(f"'{path}' mixes units {list(units)}")

        ranks = frame["rank"].to_numpy()
        if np.all(np.mod(ranks, 1) == 0):
            ranks = ranks.astype(np.int64)

        try:
            return PercentileCurve(ranks, frame["value"].to_numpy(dtype=np.float64), str(units[0]))
        except ValueError as e:
            raise MeshFormatError(f"Invalid curve in '{path}': {e}") from e

    def save(self, data, path):
        """
        Saves a percentile curve.

        Args:
            data: PercentileCurve
            path: output file path
        """

        self.directory(path)
        data.dataframe().to_csv(path, index=False, float_format="%.12f")

        logger.info("Wrote %s", path)
