"""
ResultBundle module
"""

import json
import logging
import os

from ..fieldstat import PercentileCurve
from ..io import CSV, VTK

# Logging configuration
logger = logging.getLogger(__name__)


class ResultBundle:
    """
    Solved surface fields, mesh quality and solve statistics of a single run.
    """

    # Fields exported as percentile curves
    CURVES = ["MPWT_integrated", "MPWT_midsurface"]

    def __init__(self, mesh, fields, quality, statistics):
        """
        Creates a new ResultBundle.

        Args:
            mesh: analysis TriangleMesh
            fields: list of SurfaceField defined on mesh
            quality: MeshQualityReport of mesh
            statistics: solve statistics dictionary
        """

        for field in fields:
            if field.values.shape[0] != mesh.vertexcount():
                raise ValueError(f"Field {field.name} is not defined on the analysis mesh")

        self.mesh = mesh
        self.fields = {field.name: field for field in fields}
        self.quality = quality
        self.statistics = statistics

    def __repr__(self):
        return f"ResultBundle(fields={list(self.fields)}, statistics={self.statistics})"

    def field(self, name):
        """
        Gets a field by name.

        Args:
            name: field name

        Returns:
            SurfaceField
        """

        if name not in self.fields:
            raise KeyError(f"Unknown field '{name}', expected one of {list(self.fields)}")

        return self.fields[name]

    def curve(self, name, weighted=True):
        """
        Percentile curve of a field.

        Args:
            name: field name
            weighted: area weighted if True, count weighted otherwise

        Returns:
            PercentileCurve
        """

        return PercentileCurve.create(self.field(name), weighted=weighted)

    def summary(self):
        """
        Builds the JSON summary. The headline value is the maximum of the mid-surface wall tension field.

        Returns:
            dict
        """

        midsurface, integrated = self.field("MPWT_midsurface"), self.field("MPWT_integrated")
        curve = self.curve("MPWT_midsurface")

        return {
            "max_mpwt": midsurface.maximum(),
            "max_mpwt_integrated": integrated.maximum(),
            "median_mpwt": float(curve.value(50)),
            "p99_mpwt": float(curve.value(99)),
            "units": midsurface.units,
            "quality": self.quality.todict(),
            **self.statistics,
        }

    def save(self, directory):
        """
        Writes wall.vtk with every field, one percentile CSV per wall tension variant and summary.json.

        Args:
            directory: output directory

        Returns:
            list of written paths
        """

        os.makedirs(directory, exist_ok=True)
        paths = [os.path.join(directory, "wall.vtk")]

        VTK().save(self.mesh, paths[0], list(self.fields.values()))

        for name in ResultBundle.CURVES:
            path = os.path.join(directory, f"{name.lower()}.csv")
            CSV().save(self.curve(name), path)
            paths.append(path)

        path = os.path.join(directory, "summary.json")
        with open(path, "w", encoding="utf-8") as f:
            json.dump(self.summary(), f, sort_keys=True, indent=2)
            f.write("\n")

        paths.append(path)
        logger.info("Wrote results to %s", directory)

        return paths
