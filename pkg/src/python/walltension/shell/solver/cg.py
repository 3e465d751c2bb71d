"""
Conjugate gradient module
"""

import logging
import math

import numpy as np

from scipy.sparse.linalg import LinearOperator, cg

from ..errors import SolverError
from .base import Solver

# Logging configuration
logger = logging.getLogger(__name__)


class ConjugateGradient(Solver):
    """
    Jacobi preconditioned conjugate gradient solver.
    """

    def solve(self, matrix, load):
        tolerance = self.config.get("tolerance", 1e-9)
        maxiter = self.config.get("maxiter", int(math.ceil(20 * math.sqrt(matrix.shape[0]))))

        diagonal = matrix.diagonal()
        if np.any(diagonal <= 0):
            raise SolverError("Stiffness matrix has non-positive diagonal entries")

        inverse = 1.0 / diagonal
        preconditioner = LinearOperator(matrix.shape, matvec=lambda x: inverse * x, dtype=np.float64)

        iterations = []
        u, info = cg(matrix, load, rtol=tolerance, atol=0.0, maxiter=maxiter, M=preconditioner, callback=iterations.append)
        logger.debug("Conjugate gradient finished after %d iterations", len(iterations))

        if info != 0:
            residual = np.linalg.norm(matrix @ u - load) / np.linalg.norm(load)
            raise SolverError(f"Conjugate gradient did not converge within {maxiter} iterations (relative residual {residual:.3e})")

        return u
