"""
Solver module
"""

import logging
import time

import numpy as np

from ..displacements import Displacements
from ..errors import SolverError

# Logging configuration
logger = logging.getLogger(__name__)


class Solver:
    """
    Base class for linear solvers. Solvers take a constrained System and return Displacements.
    """

    def __init__(self, config=None):
        """
        Creates a new Solver.

        Args:
            config: solver configuration
        """

        self.config = config if config is not None else {}

        # Wall clock seconds of the last solve
        self.seconds = None

    def __call__(self, system):
        """
        Solves system. Fixed degrees of freedom are exactly zero in the result.

        Args:
            system: System

        Returns:
            Displacements
        """

        start = time.perf_counter()

        if np.any(system.load):
            u = self.solve(system.matrix, system.load)
        else:
            u = np.zeros(system.size())

        if not np.all(np.isfinite(u)):
            raise SolverError("Solver produced non-finite displacements")

        u[system.mask] = 0.0
        residual = system.residual(u)

        self.seconds = time.perf_counter() - start
        logger.info("Solved %d dofs in %.2fs, relative residual %.3e", system.size(), self.seconds, residual)

        return Displacements(u, residual)

    def solve(self, matrix, load):
        """
        Solves a symmetric positive definite sparse system.

        Args:
            matrix: scipy sparse matrix
            load: right hand side

        Returns:
            solution vector
        """

        raise NotImplementedError
