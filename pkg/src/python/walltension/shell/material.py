"""
Material module
"""

import numpy as np


class Material:
    """
    Linear isotropic elastic material. Moduli are in MPa.
    """

    def __init__(self, youngs=100000.0, poisson=0.49):
        """
        Creates a new Material.

        Args:
            youngs: Young's modulus in MPa
            poisson: Poisson's ratio in [0, 0.5)
        """

        if not np.isfinite(youngs) or youngs <= 0:
            raise ValueError(f"Young's modulus must be positive, found {youngs}")
        if not 0 <= poisson < 0.5:
            raise ValueError(f"Poisson's ratio must be in [0, 0.5), found {poisson}")

        self.youngs = float(youngs)
        self.poisson = float(poisson)

    def __repr__(self):
        return f"Material(youngs={self.youngs:g}, poisson={self.poisson:g})"

    def elasticity(self):
        """
        Plane stress elasticity matrix for engineering strains (exx, eyy, gxy).

        Returns:
            3x3 matrix in MPa
        """

        e, v = self.youngs, self.poisson
        return e / (1.0 - v * v) * np.array([[1.0, v, 0.0], [v, 1.0, 0.0], [0.0, 0.0, 0.5 * (1.0 - v)]])
