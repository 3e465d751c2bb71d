"""
Remesh errors module
"""

from ..geometry import MeshError


class RemeshError(MeshError):
    """
    Error raised when remeshing would break the surface topology.
    """
