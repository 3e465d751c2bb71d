"""
Shell errors module
"""

# Degree of freedom names per vertex
COMPONENTS = ["ux", "uy", "uz", "rx", "ry", "rz"]


class SingularSystemError(ValueError):
    """
    Error raised when the stiffness matrix is singular, either because the model has no constraints or because the
    factorization hits a zero pivot.
    """

    def __init__(self, message, dof=None):
        """
        Creates a new SingularSystemError.

        Args:
            message: error message
            dof: optional global degree of freedom where the factorization failed
        """

        if dof is not None:
            message = f"{message} (pivot at vertex {dof // 6}, component {COMPONENTS[dof % 6]})"

        super().__init__(message)
        self.dof = dof


class SolverError(RuntimeError):
    """
    Error raised when a solver fails to produce a finite solution within its iteration cap.
    """
