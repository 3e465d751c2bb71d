"""
System module
"""

import numpy as np

from scipy.sparse import diags


class System:
    """
    Sparse linear system K u = f with fixed degrees of freedom applied. Fixed rows and columns are zeroed and their
    diagonal set to one, so the constrained matrix stays symmetric and the fixed displacements solve to exactly zero.
    """

    def __init__(self, stiffness, load, fixed):
        """
        Creates a new System.

        Args:
            stiffness: unconstrained global stiffness, scipy sparse matrix
            load: unconstrained global load vector
            fixed: fixed global degree of freedom indices
        """

        size = stiffness.shape[0]

        self.fixed = np.asarray(fixed, dtype=np.int64)
        self.mask = np.zeros(size, dtype=bool)
        self.mask[self.fixed] = True

        free = diags((~self.mask).astype(np.float64))
        self.stiffness = stiffness.tocsr()
        self.matrix = (free @ self.stiffness @ free + diags(self.mask.astype(np.float64))).tocsr()
        self.matrix.sort_indices()

        self.load = np.where(self.mask, 0.0, np.asarray(load, dtype=np.float64))

    def __repr__(self):
        return f"System(dofs={self.size()}, fixed={self.fixed.size}, nonzeros={self.matrix.nnz})"

    def size(self):
        """
        Number of unknowns.

        Returns:
            int
        """

        return self.matrix.shape[0]

    def residual(self, u):
        """
        Relative residual of a candidate solution.

        Args:
            u: solution vector

        Returns:
            ||K u - f|| / ||f||, or ||K u|| when f = 0
        """

        norm = np.linalg.norm(self.load)
        residual = np.linalg.norm(self.matrix @ u - self.load)
        return float(residual / norm) if norm > 0 else float(residual)

    def energy(self, u):
        """
        Strain energy 1/2 u' K u.

        Args:
            u: solution vector

        Returns:
            energy in N mm
        """

        return float(0.5 * u @ (self.matrix @ u))

    def work(self, u):
        """
        External work 1/2 f' u.

        Args:
            u: solution vector

        Returns:
            work in N mm
        """

        return float(0.5 * self.load @ u)
