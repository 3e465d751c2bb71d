"""
ShellSection module
"""

import numpy as np


class ShellSection:
    """
    Shell cross section: thickness, reference surface of the input mesh and the number of through-thickness sample points.
    """

    # Supported reference surfaces
    REFERENCES = ("inner", "mid")

    def __init__(self, thickness=0.086, reference="inner", points=5):
        """
        Creates a new ShellSection.

        Args:
            thickness: wall thickness in mm
            reference: "inner" if the input surface is the lumen, "mid" if it is already the mid-surface
            points: odd number of through-thickness points >= 3
        """

        if not np.isfinite(thickness) or thickness <= 0:
            raise ValueError(f"Thickness must be positive, found {thickness}")
        if reference not in ShellSection.REFERENCES:
            raise ValueError(f"Reference surface must be one of {ShellSection.REFERENCES}, found {reference}")
        if int(points) != points or points < 3 or points % 2 == 0:
            raise ValueError(f"Through-thickness points must be an odd integer >= 3, found {points}")

        self.thickness = float(thickness)
        self.reference = reference
        self.points = int(points)

    def __repr__(self):
        return f"ShellSection(thickness={self.thickness:g}, reference={self.reference}, points={self.points})"

    def offset(self):
        """
        Distance from the input surface to the mid-surface along outward normals.

        Returns:
            offset in mm
        """

        return 0.5 * self.thickness if self.reference == "inner" else 0.0

    def depths(self, points=None):
        """
        Evenly spaced sample depths from the inner surface (0) to the outer surface (t), both included.

        Args:
            points: number of points, defaults to this section's points

        Returns:
            depths in mm
        """

        return np.linspace(0.0, self.thickness, self.points if points is None else points)

    def update(self, **kwargs):
        """
        Creates a copy of this section with selected values replaced.

        Args:
            kwargs: thickness, reference or points

        Returns:
            ShellSection
        """

        return ShellSection(**{**{"thickness": self.thickness, "reference": self.reference, "points": self.points}, **kwargs})
