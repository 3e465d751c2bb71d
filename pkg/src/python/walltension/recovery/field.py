"""
SurfaceField module
"""

import numpy as np

from ..geometry import MeshError


class SurfaceField:
    """
    Named scalar field over mesh vertices with area weights.
    """

    @staticmethod
    def average(name, values, mesh, units):
        """
        Averages per-element values to vertices, weighting each incident element by its area.

        Args:
            name: field name
            values: one value per triangle
            mesh: TriangleMesh
            units: units tag

        Returns:
            SurfaceField
        """

        values = np.asarray(values, dtype=np.float64)
        if values.shape != (mesh.trianglecount(),):
            raise ValueError(f"Field {name} has {values.shape[0]} values for {mesh.trianglecount()} triangles")

        areas = mesh.areas()
        sums, totals = np.zeros(mesh.vertexcount()), np.zeros(mesh.vertexcount())
        for x in range(3):
            np.add.at(sums, mesh.triangles[:, x], values * areas)
            np.add.at(totals, mesh.triangles[:, x], areas)

        isolated = np.flatnonzero(totals <= 0)
        if isolated.size:
            raise MeshError(f"Cannot average {name} to {isolated.size} isolated vertex(es)", [f"vertex {x}" for x in isolated[:10]])

        return SurfaceField(name, sums / totals, totals / 3.0, units)

    def __init__(self, name, values, weights, units):
        """
        Creates a new SurfaceField.

        Args:
            name: field name
            values: per-vertex values
            weights: per-vertex area weights
            units: units tag
        """

        self.name = name
        self.values = np.asarray(values, dtype=np.float64)
        self.weights = np.asarray(weights, dtype=np.float64)
        self.units = units

        if self.values.shape != self.weights.shape:
            raise ValueError(f"Field {name} has {self.values.shape[0]} values and {self.weights.shape[0]} weights")

    def __repr__(self):
        return f"SurfaceField(name={self.name}, vertices={self.values.shape[0]}, units={self.units})"

    def maximum(self):
        """
        Maximum field value.

        Returns:
            float
        """

        return float(self.values.max())

    def mean(self):
        """
        Area weighted mean value.

        Returns:
            float
        """

        return float(np.average(self.values, weights=self.weights))
