"""
STL module
"""

import logging
import os

import numpy as np

from ..geometry import DEGENERATE, MeshError, Topology, TriangleMesh, Weld
from .base import Format
from .errors import MeshFormatError

# Logging configuration
logger = logging.getLogger(__name__)

# Binary STL facet record, 50 bytes
RECORD = np.dtype([("normal", "<f4", (3,)), ("vertices", "<f4", (3, 3)), ("attribute", "<u2")])


class STL(Format):
    """
    Reads and writes ASCII and binary STL files. Loaded meshes are welded, cleaned of degenerate triangles and checked for
    manifoldness.
    """

    def __init__(self, tolerance=1e-5):
        """
        Creates a new STL format.

        Args:
            tolerance: vertex weld tolerance in mm
        """

        self.tolerance = tolerance

        # Number of degenerate triangles dropped by the last load
        self.dropped = 0

    def load(self, path):
        """
        Loads a mesh from an STL file.

        Args:
            path: input file path

        Returns:
            TriangleMesh
        """

        try:
            with open(path, "rb") as f:
                data = f.read()
        except OSError as e:
            raise MeshFormatError(f"Unable to read STL file '{path}': {e}") from e

        corners = self.binary(data) if self.isbinary(data) else self.ascii(data, path)
        if not np.all(np.isfinite(corners)):
            raise MeshFormatError(f"Non-finite coordinates in '{path}'")

        logger.info("Read %d facet(s) from %s", corners.shape[0], path)
        return self.build(corners, os.path.basename(path))

    def save(self, data, path, binary=True):
        """
        Saves a mesh to an STL file.

        Args:
            data: TriangleMesh
            path: output file path
            binary: writes binary STL if True, ASCII otherwise
        """

        self.directory(path)

        mesh = data
        normals, corners = mesh.normals(), mesh.corners()

        if binary:
            records = np.zeros(mesh.trianglecount(), dtype=RECORD)
            records["normal"], records["vertices"] = normals, corners

            with open(path, "wb") as f:
                f.write(b"walltension binary STL".ljust(80, b" "))
                f.write(np.array([mesh.trianglecount()], dtype="<u4").tobytes())
                f.write(records.tobytes())
        else:
            with open(path, "w", encoding="utf-8") as f:
                f.write("solid walltension\n")
                for normal, triangle in zip(normals, corners):
                    f.write(f"  facet normal {normal[0]:.17g} {normal[1]:.17g} {normal[2]:.17g}\n    outer loop\n")
                    for x in triangle:
                        f.write(f"      vertex {x[0]:.17g} {x[1]:.17g} {x[2]:.17g}\n")
                    f.write("    endloop\n  endfacet\n")
                f.write("endsolid walltension\n")

        logger.info("Wrote %d triangle(s) to %s", mesh.trianglecount(), path)

    def isbinary(self, data):
        """
        Detects binary STL. The facet count stored after the 80 byte header must match the file size.

        Args:
            data: file contents

        Returns:
            True if data is a binary STL
        """

        if len(data) < 84:
            return False

        count = int(np.frombuffer(data[80:84], dtype="<u4")[0])
        if len(data) == 84 + 50 * count:
            return True

        if data.lstrip()[:5].lower() == b"solid":
            return False

        raise MeshFormatError(f"Truncated binary STL: header declares {count} facet(s), file has {len(data)} bytes")

    def binary(self, data):
        """
        Parses binary STL records.

        Args:
            data: file contents

        Returns:
            facet corners, shape (m, 3, 3)
        """

        records = np.frombuffer(data, dtype=RECORD, offset=84)
        return records["vertices"].astype(np.float64)

    def ascii(self, data, path):
        """
        Parses ASCII STL facets.

        Args:
            data: file contents
            path: file path for error messages

        Returns:
            facet corners, shape (m, 3, 3)
        """

        try:
            lines = data.decode("utf-8").splitlines()
        except UnicodeDecodeError as e:
            raise MeshFormatError(f"'{path}' is neither binary nor ASCII STL") from e

        lines = [line.split() for line in lines]
        lines = [line for line in lines if line]
        if not lines or lines[0][0].lower() != "solid":
            raise MeshFormatError(f"'{path}' is missing the ASCII STL 'solid' header")

        corners, facet = [], None
        for number, tokens in enumerate(lines[1:], start=2):
            keyword = tokens[0].lower()
            if keyword == "facet":
                if facet is not None:
                    raise MeshFormatError(f"{path}:{number}: facet opened before the previous one was closed")
                facet = []
            elif keyword == "vertex":
                if facet is None or len(tokens) != 4:
                    raise MeshFormatError(f"{path}:{number}: malformed vertex record")
                try:
                    facet.append([float(x) for x in tokens[1:]])
                except ValueError as e:
                    raise MeshFormatError(f"{path}:{number}: malformed vertex coordinates") from e
            elif keyword == "endfacet":
                if facet is None or len(facet) != 3:
                    raise MeshFormatError(f"{path}:{number}: facet must have exactly 3 vertices")
                corners.append(facet)
                facet = None
            elif keyword in ("endsolid", "solid"):
                if facet is not None:
                    raise MeshFormatError(f"{path}:{number}: unterminated facet")
            elif keyword not in ("outer", "endloop"):
                raise MeshFormatError(f"{path}:{number}: unexpected token '{tokens[0]}'")

        if facet is not None:
            raise MeshFormatError(f"'{path}' ends inside a facet")

        return np.array(corners, dtype=np.float64).reshape(-1, 3, 3)

    def build(self, corners, provenance):
        """
        Builds a clean mesh from raw facet corners.

        Args:
            corners: facet corners, shape (m, 3, 3)
            provenance: source label

        Returns:
            TriangleMesh
        """

        count = corners.shape[0]
        vertices, triangles = Weld(self.tolerance)(corners.reshape(-1, 3), np.arange(count * 3).reshape(-1, 3))
        logger.info("Welded %d raw vertices into %d", count * 3, vertices.shape[0])

        # Drop degenerate triangles
        mesh = TriangleMesh(vertices, triangles, provenance)
        keep = mesh.areas() >= DEGENERATE
        self.dropped = int((~keep).sum())
        if self.dropped:
            logger.warning("Dropped %d degenerate triangle(s)", self.dropped)
            mesh = mesh.update(triangles=mesh.triangles[keep]).compact()

        if not mesh.trianglecount():
            raise MeshError(f"No valid triangles in '{provenance}'")

        topology = Topology(mesh)
        topology.manifold()

        if not topology.oriented():
            logger.warning("Inconsistent triangle winding in %s, repairing", provenance)
            mesh = topology.orient()

        return mesh
