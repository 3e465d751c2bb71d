"""
Displacements module
"""

import numpy as np


class Displacements:
    """
    Generalized nodal displacements: 3 translations (mm) and 3 rotations (rad) per vertex in global axes.
    """

    def __init__(self, values, residual=None):
        """
        Creates new Displacements.

        Args:
            values: array with 6 values per vertex, flat or shape (n, 6)
            residual: relative residual ||K u - f|| / ||f|| of the solve
        """

        self.values = np.asarray(values, dtype=np.float64).reshape(-1, 6)
        self.residual = residual

    def __repr__(self):
        return f"Displacements(vertices={self.values.shape[0]}, residual={self.residual})"

    def translations(self):
        """
        Translations per vertex.

        Returns:
            shape (n, 3)
        """

        return self.values[:, :3]

    def rotations(self):
        """
        Rotations per vertex.

        Returns:
            shape (n, 3)
        """

        return self.values[:, 3:]

    def flat(self):
        """
        Flat global displacement vector.

        Returns:
            shape (6n,)
        """

        return self.values.reshape(-1)

    def scale(self, factor):
        """
        Multiplies every component by factor.

        Args:
            factor: scale factor

        Returns:
            Displacements
        """

        return Displacements(self.values * factor, self.residual)
