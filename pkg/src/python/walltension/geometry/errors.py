"""
Mesh errors module
"""


class MeshError(ValueError):
    """
    Error raised when a triangle mesh violates a structural invariant.
    """

    def __init__(self, message, diagnostics=None):
        """
        Creates a new MeshError.

        Args:
            message: error message
            diagnostics: optional list of diagnostic strings
        """

        super().__init__(message)
        self.diagnostics = list(diagnostics) if diagnostics else []


class NonManifoldError(MeshError):
    """
    Error raised when edges are shared by more than two triangles.
    """

    def __init__(self, edges):
        """
        Creates a new NonManifoldError.

        Args:
            edges: offending edges as (vertex, vertex) pairs
        """

        self.edges = [tuple(int(x) for x in edge) for edge in edges]
        super().__init__(
            f"Mesh is not edge-manifold: {len(self.edges)} edge(s) shared by more than two triangles",
            [f"edge {a}-{b}" for a, b in self.edges],
        )


class OrientationError(MeshError):
    """
    Error raised when a consistent triangle winding can't be found.
    """
