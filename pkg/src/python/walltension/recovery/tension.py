"""
Tension module
"""

import numpy as np


class Tension:
    """
    Principal stress and wall tension formulas. Tensors are plane stress (xx, yy, xy) triples along the last axis.
    """

    @staticmethod
    def principal(tensor):
        """
        Maximum in-plane principal value, signed with tension positive.

        Args:
            tensor: array with shape (..., 3)

        Returns:
            array with shape (...)
        """

        tensor = np.asarray(tensor, dtype=np.float64)
        xx, yy, xy = tensor[..., 0], tensor[..., 1], tensor[..., 2]
        return 0.5 * (xx + yy) + np.hypot(0.5 * (xx - yy), xy)

    @staticmethod
    def integrated(profile):
        """
        Wall tension by through-thickness quadrature: (t / n) times the sum of the principal stress at every sample.

        Args:
            profile: ThroughThicknessProfile

        Returns:
            tension in N/mm per element
        """

        principal = Tension.principal(profile.stresses)
        return profile.thickness / profile.depths.shape[0] * principal.sum(axis=-1)

    @staticmethod
    def midsurface(resultants):
        """
        Wall tension as the mid-surface principal stress times the thickness. The thickness cancels, leaving the maximum
        principal membrane force.

        Args:
            resultants: StressResultants

        Returns:
            tension in N/mm per element
        """

        return Tension.principal(resultants.membrane)

    @staticmethod
    def mean(tension, thickness):
        """
        Mean wall stress over the thickness.

        Args:
            tension: wall tension in N/mm
            thickness: wall thickness in mm or ShellSection

        Returns:
            stress in MPa
        """

        thickness = getattr(thickness, "thickness", thickness)
        if thickness <= 0:
            raise ValueError(f"Thickness must be positive, found {thickness}")

        return np.asarray(tension, dtype=np.float64) / thickness
