"""
MeshQualityReport module
"""

import numpy as np

from .topology import Topology


class MeshQualityReport:
    """
    Summary statistics for a triangle mesh.
    """

    # Report fields in output order
    FIELDS = [
        "vertex_count",
        "triangle_count",
        "mean_edge_length",
        "min_edge_length",
        "max_edge_length",
        "min_angle",
        "boundary_loop_count",
        "watertight",
        "component_count",
        "euler",
    ]

    @staticmethod
    def create(mesh):
        """
        Computes a quality report for mesh.

        Args:
            mesh: TriangleMesh

        Returns:
            MeshQualityReport
        """

        topology = Topology(mesh)
        lengths = mesh.edgelengths()
        loops = topology.loops()

        return MeshQualityReport(
            vertex_count=mesh.vertexcount(),
            triangle_count=mesh.trianglecount(),
            mean_edge_length=float(lengths.mean()) if lengths.size else 0.0,
            min_edge_length=float(lengths.min()) if lengths.size else 0.0,
            max_edge_length=float(lengths.max()) if lengths.size else 0.0,
            min_angle=float(np.degrees(mesh.angles().min())) if mesh.trianglecount() else 0.0,
            boundary_loop_count=len(loops),
            watertight=bool(topology.closed()) and mesh.trianglecount() > 0,
            component_count=int(topology.components()[0]) if mesh.trianglecount() else 0,
            euler=mesh.euler(),
        )

    def __init__(self, **kwargs):
        """
        Creates a new MeshQualityReport.

        Args:
            kwargs: report fields, see FIELDS
        """

        for field in MeshQualityReport.FIELDS:
            setattr(self, field, kwargs.get(field))

    def __repr__(self):
        return f"MeshQualityReport({', '.join(f'{field}={getattr(self, field)}' for field in MeshQualityReport.FIELDS)})"

    def todict(self):
        """
        Converts this report to a dictionary.

        Returns:
            dict
        """

        return {field: getattr(self, field) for field in MeshQualityReport.FIELDS}
