"""
StressResultants module
"""

import numpy as np

from .profile import ThroughThicknessProfile


class StressResultants:
    """
    Membrane forces (N/mm) and bending moments (N mm/mm) per element in the element local frame.
    """

    def __init__(self, membrane, bending):
        """
        Creates new StressResultants.

        Args:
            membrane: (Nxx, Nyy, Nxy) per element, shape (m, 3)
            bending: (Mxx, Myy, Mxy) per element, shape (m, 3)
        """

        self.membrane = np.asarray(membrane, dtype=np.float64)
        self.bending = np.asarray(bending, dtype=np.float64)

        if self.membrane.shape != self.bending.shape or self.membrane.shape[-1] != 3:
            raise ValueError(f"Resultant shapes {self.membrane.shape} and {self.bending.shape} do not match")

    def __repr__(self):
        return f"StressResultants(elements={self.count()})"

    def count(self):
        """
        Number of elements.

        Returns:
            int
        """

        return self.membrane.reshape(-1, 3).shape[0]

    def stress(self, depth, thickness):
        """
        Plane stress at a depth measured from the inner surface. Stress is linear through the thickness.

        Args:
            depth: depth in mm, scalar or array
            thickness: wall thickness in mm

        Returns:
            stresses in MPa, shape (..., depths, 3) for array depths or (..., 3) for scalar depth
        """

        t = thickness
        depth = np.asarray(depth, dtype=np.float64)
        z = (depth - 0.5 * t)[..., None]

        if depth.ndim:
            return self.membrane[..., None, :] / t + 12.0 * self.bending[..., None, :] * z / t**3

        return self.membrane / t + 12.0 * self.bending * z / t**3

    def profile(self, section, points=None):
        """
        Samples the through-thickness stress profile.

        Args:
            section: ShellSection
            points: number of samples, defaults to the section's points

        Returns:
            ThroughThicknessProfile
        """

        depths = section.depths(points)
        return ThroughThicknessProfile(depths, self.stress(depths, section.thickness), section.thickness)

    def scale(self, factor):
        """
        Multiplies all resultants by factor.

        Args:
            factor: scale factor

        Returns:
            StressResultants
        """

        return StressResultants(self.membrane * factor, self.bending * factor)
