"""
Shell imports
"""

from .assembler import Assembler
from .constraints import ConstraintSet
from .displacements import Displacements
from .element import ShellElement
from .errors import COMPONENTS, SingularSystemError, SolverError
from .execute import Execute
from .load import LoadCase
from .material import Material
from .model import ShellModel
from .pressure import Pressure
from .section import ShellSection
from .solver import ConjugateGradient, Direct, Solver, SolverFactory
from .system import System
