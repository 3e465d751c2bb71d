"""
IO imports
"""

from .base import Format
from .csv import CSV
from .errors import MeshFormatError
from .factory import FormatFactory
from .stl import STL
from .vtk import VTK
