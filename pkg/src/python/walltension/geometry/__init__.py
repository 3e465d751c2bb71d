"""
Geometry imports
"""

from .errors import MeshError, NonManifoldError, OrientationError
from .generator import Generator
from .loop import BoundaryLoop
from .mesh import DEGENERATE, TriangleMesh
from .quality import MeshQualityReport
from .topology import Topology
from .weld import Weld
