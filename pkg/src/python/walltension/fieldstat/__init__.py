"""
Field statistics imports
"""

from .comparison import CurveComparison
from .convergence import ConvergenceReport
from .curve import RANKS, PercentileCurve
