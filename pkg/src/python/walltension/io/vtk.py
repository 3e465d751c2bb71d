"""
VTK module
"""

import logging

import numpy as np

from ..geometry import TriangleMesh
from .base import Format
from .errors import MeshFormatError

# Logging configuration
logger = logging.getLogger(__name__)


class VTK(Format):
    """
    Legacy ASCII VTK POLYDATA files with per-vertex scalar fields.
    """

    def load(self, path):
        """
        Loads a mesh and its point scalar fields.

        Args:
            path: input file path

        Returns:
            (TriangleMesh, {field name: values})
        """

        try:
            with open(path, "r", encoding="utf-8") as f:
                tokens = f.read().split()
        except OSError as e:
            raise MeshFormatError(f"Unable to read VTK file '{path}': {e}") from e

        try:
            position = tokens.index("POINTS")
            count = int(tokens[position + 1])
            start = position + 3
            vertices = np.array(tokens[start : start + 3 * count], dtype=np.float64).reshape(-1, 3)

            position = tokens.index("POLYGONS")
            polygons = int(tokens[position + 1])
            start = position + 3
            triangles = np.array(tokens[start : start + 4 * polygons], dtype=np.int64).reshape(-1, 4)
            if np.any(triangles[:, 0] != 3):
                raise MeshFormatError(f"'{path}' contains non-triangle polygons")

            fields = {}
            for position in [x for x, token in enumerate(tokens) if token == "SCALARS"]:
                name, start = tokens[position + 1], position + 6
                fields[name] = np.array(tokens[start : start + count], dtype=np.float64)

        except (ValueError, IndexError) as e:
            raise MeshFormatError(f"Malformed VTK file '{path}'") from e

        return TriangleMesh(vertices, triangles[:, 1:], path), fields

    def save(self, data, path, fields=None, title="walltension"):
        """
        Saves a mesh and scalar fields.

        Args:
            data: TriangleMesh
            path: output file path
            fields: list of (name, values) pairs or objects with name and values attributes
            title: header title line
        """

        self.directory(path)

        mesh = data
        with open(path, "w", encoding="utf-8") as f:
            f.write(f"# vtk DataFile Version 3.0\n{title}\nASCII\nDATASET POLYDATA\n")

            f.write(f"POINTS {mesh.vertexcount()} double\n")
            np.savetxt(f, mesh.vertices, fmt="%.12g")

            f.write(f"POLYGONS {mesh.trianglecount()} {4 * mesh.trianglecount()}\n")
            np.savetxt(f, np.hstack([np.full((mesh.trianglecount(), 1), 3), mesh.triangles]), fmt="%d")

            if fields:
                f.write(f"POINT_DATA {mesh.vertexcount()}\n")
                for field in fields:
                    name, values = (field.name, field.values) if hasattr(field, "values") else field
                    values = np.asarray(values, dtype=np.float64)
                    if values.shape[0] != mesh.vertexcount():
                        raise ValueError(f"Field {name} has {values.shape[0]} values for {mesh.vertexcount()} vertices")

                    f.write(f"SCALARS {name} double 1\nLOOKUP_TABLE default\n")
                    np.savetxt(f, values, fmt="%.12g")

        logger.info("Wrote %s with %d field(s)", path, len(fields) if fields else 0)
