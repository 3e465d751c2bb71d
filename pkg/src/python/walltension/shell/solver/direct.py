"""
Direct module
"""

import logging

import numpy as np

from scipy.sparse.linalg import splu

# Conditional import
try:
    from sksparse.cholmod import CholmodNotPositiveDefiniteError, cholesky

    CHOLMOD = True
except ImportError:
    CHOLMOD = False

from ..errors import SingularSystemError
from .base import Solver
from .cg import ConjugateGradient

# Logging configuration
logger = logging.getLogger(__name__)


class Direct(Solver):
    """
    Sparse direct solver. Uses a CHOLMOD Cholesky factorization when scikit-sparse is installed, SuperLU otherwise.
    Falls back to conjugate gradient when the factorization runs out of memory.
    """

    # Relative pivot size that flags a singular factorization
    PIVOT = 1e-14

    def solve(self, matrix, load):
        backend = self.config.get("backend", "cholmod" if CHOLMOD else "superlu")
        if backend == "cholmod" and not CHOLMOD:
            raise ImportError('CHOLMOD is not available - install "cholmod" extra to enable')

        try:
            if backend == "cholmod":
                return self.cholmod(matrix, load)

            return self.superlu(matrix, load)

        except MemoryError:
            logger.warning("Direct factorization ran out of memory, falling back to conjugate gradient")
            return ConjugateGradient(self.config).solve(matrix, load)

    def cholmod(self, matrix, load):
        """
        Solves with a CHOLMOD Cholesky factorization.

        Args:
            matrix: scipy sparse matrix
            load: right hand side

        Returns:
            solution vector
        """

        try:
            factor = cholesky(matrix.tocsc())
        except CholmodNotPositiveDefiniteError:
            # SuperLU reports the failing pivot in the original ordering
            logger.warning("Cholesky factorization failed, locating pivot with SuperLU")
            return self.superlu(matrix, load)

        return factor(load)

    def superlu(self, matrix, load):
        """
        Solves with a SuperLU factorization using a COLAMD column ordering.

        Args:
            matrix: scipy sparse matrix
            load: right hand side

        Returns:
            solution vector
        """

        try:
            lu = splu(matrix.tocsc(), permc_spec="COLAMD")
        except RuntimeError as e:
            raise SingularSystemError(f"Stiffness factorization failed: {e}") from e

        pivots = np.abs(lu.U.diagonal())
        column = int(np.argmin(pivots))
        if pivots[column] <= Direct.PIVOT * pivots.max():
            raise SingularSystemError("Stiffness matrix is singular", int(np.argsort(lu.perm_c)[column]))

        return lu.solve(load)
