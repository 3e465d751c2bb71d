"""
ThroughThicknessProfile module
"""

import numpy as np

from .tension import Tension


class ThroughThicknessProfile:
    """
    Plane stress tensors sampled at evenly spaced depths from the inner surface (depth 0) to the outer surface (depth t).
    """

    def __init__(self, depths, stresses, thickness):
        """
        Creates a new ThroughThicknessProfile.

        Args:
            depths: sample depths in mm, shape (n,)
            stresses: (xx, yy, xy) stresses in MPa, shape (m, n, 3) for m elements or (n, 3)
            thickness: wall thickness in mm
        """

        self.depths = np.asarray(depths, dtype=np.float64)
        self.stresses = np.asarray(stresses, dtype=np.float64)
        self.thickness = float(thickness)

    def __repr__(self):
        return f"ThroughThicknessProfile(points={self.depths.shape[0]}, thickness={self.thickness:g})"

    def principal(self):
        """
        Maximum principal stress at every sample.

        Returns:
            array with shape (m, n) or (n,)
        """

        return Tension.principal(self.stresses)

    def inner(self):
        """
        Stresses at the innermost sample.

        Returns:
            array with shape (m, 3) or (3,)
        """

        return self.stresses[..., 0, :]

    def middle(self):
        """
        Stresses at the middle sample.

        Returns:
            array with shape (m, 3) or (3,)
        """

        return self.stresses[..., self.depths.shape[0] // 2, :]

    def outer(self):
        """
        Stresses at the outermost sample.

        Returns:
            array with shape (m, 3) or (3,)
        """

        return self.stresses[..., -1, :]
