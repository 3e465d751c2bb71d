"""
Assembler module
"""

import logging

import numpy as np

from scipy.sparse import coo_matrix

from .element import ShellElement
from .errors import SingularSystemError, SolverError
from .execute import Execute
from .pressure import Pressure
from .system import System

# Logging configuration
logger = logging.getLogger(__name__)


class Assembler:
    """
    Assembles the global stiffness matrix and pressure load vector of a ShellModel. Element matrices are computed in
    vectorized chunks, optionally across a thread pool, and scattered into a sparse matrix.
    """

    def __init__(self, model, execute=None, threads=1, deterministic=True, chunk=4096):
        """
        Creates a new Assembler.

        Args:
            model: ShellModel
            execute: optional shared Execute instance
            threads: number of threads, 1 assembles sequentially
            deterministic: merges chunks in submission order when True, which makes assembly bitwise reproducible
            chunk: number of elements per work unit
        """

        self.model = model
        self.element = ShellElement(model.material, model.section)
        self.execute = execute
        self.threads = threads
        self.deterministic = deterministic
        self.chunk = chunk

    def __call__(self):
        """
        Builds the constrained system.

        Returns:
            System
        """

        if self.model.constraints.empty():
            raise SingularSystemError(
                "Model has no constraints: an open mesh needs clamped rims and a closed mesh needs a rigid-body tie-down"
            )

        stiffness, load = self.stiffness(), self.load()
        if not np.all(np.isfinite(stiffness.data)) or not np.all(np.isfinite(load)):
            raise SolverError("Non-finite entries in the assembled system")

        system = System(stiffness, load, self.model.constraints.indices())
        logger.info("Assembled %d dofs with %d nonzeros, %d fixed", system.size(), system.matrix.nnz, system.fixed.size)

        return system

    def stiffness(self):
        """
        Assembles the unconstrained global stiffness matrix.

        Returns:
            scipy csr matrix, shape (6n, 6n)
        """

        mesh = self.model.mesh
        count = mesh.trianglecount()
        args = [(start, min(start + self.chunk, count)) for start in range(0, count, self.chunk)]

        method = "thread" if self.threads and self.threads > 1 else None
        if method:
            execute = self.execute if self.execute else Execute(self.threads)
            try:
                results = execute.run(method, self.elements, args, ordered=self.deterministic)
            finally:
                if not self.execute:
                    execute.close()
        else:
            results = [self.elements(*arg) for arg in args]

        rows, cols, values = (np.concatenate(x) for x in zip(*results))

        size = self.model.dofs()
        return coo_matrix((values, (rows, cols)), shape=(size, size)).tocsr()

    def elements(self, start, end):
        """
        Computes the sparse triplets of a range of elements.

        Args:
            start: first element
            end: end element, exclusive

        Returns:
            (rows, cols, values)
        """

        mesh = self.model.mesh
        triangles = mesh.triangles[start:end]

        matrices = self.element.stiffnesses(mesh.vertices[triangles])
        matrices = 0.5 * (matrices + matrices.transpose(0, 2, 1))

        dofs = (6 * triangles[:, :, None] + np.arange(6)).reshape(-1, 18)
        rows = np.broadcast_to(dofs[:, :, None], matrices.shape)
        cols = np.broadcast_to(dofs[:, None, :], matrices.shape)

        return rows.reshape(-1), cols.reshape(-1), matrices.reshape(-1)

    def load(self):
        """
        Builds the global pressure load vector.

        Returns:
            shape (6n,)
        """

        return Pressure(self.model.mesh).vector(self.model.load.pressure)
