"""
Recovery imports
"""

from .field import SurfaceField
from .profile import ThroughThicknessProfile
from .recovery import Recovery
from .resultants import StressResultants
from .tension import Tension
