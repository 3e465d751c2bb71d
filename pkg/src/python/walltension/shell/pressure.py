"""
Pressure module
"""

import numpy as np


class Pressure:
    """
    Consistent nodal forces of a uniform pressure acting along outward triangle normals. The load is applied on the
    undeformed configuration.
    """

    def __init__(self, mesh):
        """
        Creates a new Pressure load builder.

        Args:
            mesh: oriented TriangleMesh
        """

        self.mesh = mesh

    def __call__(self, pressure):
        """
        Computes nodal forces. Every triangle contributes p * A * n / 3 to each of its corners.

        Args:
            pressure: pressure in MPa, positive pushes the surface outward

        Returns:
            forces in N, shape (n, 3)
        """

        contributions = pressure * self.mesh.crosses() / 6.0

        forces = np.zeros((self.mesh.vertexcount(), 3))
        for x in range(3):
            np.add.at(forces, self.mesh.triangles[:, x], contributions)

        return forces

    def vector(self, pressure):
        """
        Global load vector with zero moments.

        Args:
            pressure: pressure in MPa

        Returns:
            shape (6n,)
        """

        loads = np.zeros((self.mesh.vertexcount(), 6))
        loads[:, :3] = self(pressure)
        return loads.reshape(-1)
