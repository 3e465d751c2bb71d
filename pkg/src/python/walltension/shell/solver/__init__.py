"""
Solver imports
"""

from .base import Solver
from .cg import ConjugateGradient
from .direct import Direct
from .factory import SolverFactory
