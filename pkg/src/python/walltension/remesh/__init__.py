"""
Remesh imports
"""

from .errors import RemeshError
from .params import RemeshParams
from .projector import Projector
from .remesher import Remesher
