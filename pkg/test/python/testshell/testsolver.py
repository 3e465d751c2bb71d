"""
Solver module tests
"""

import unittest

from unittest.mock import patch

import numpy as np

from scipy.sparse import csr_matrix, diags

from walltension.shell import ConjugateGradient, Direct, SingularSystemError, Solver, SolverError, SolverFactory, System


class TestSolver(unittest.TestCase):
    """
    Linear solver tests.
    """

    @classmethod
    def setUpClass(cls):
        """
        Two springs in series, fixed at one end and pulled at the other.
        """

        cls.springs = System(csr_matrix(np.array([[2.0, -1.0], [-1.0, 1.0]])), [0.0, 1.0], [])

        # Chain of 30 unit springs, fixed at the first node
        size = 30
        stiffness = diags([-np.ones(size - 1), np.full(size, 2.0), -np.ones(size - 1)], [-1, 0, 1]).tolil()
        stiffness[size - 1, size - 1] = 1.0
        cls.chain = System(stiffness.tocsr(), np.linspace(0.1, 1.0, size), [0])

    def testDirect(self):
        """
        Test SuperLU solve
        """

        solver = Direct({"backend": "superlu"})
        displacements = solver(self.springs)

        self.assertTrue(np.allclose(displacements.flat(), [1.0, 2.0]))
        self.assertLess(displacements.residual, 1e-12)
        self.assertGreaterEqual(solver.seconds, 0.0)

    def testConjugateGradient(self):
        """
        Test Jacobi preconditioned conjugate gradient
        """

        direct = Direct({"backend": "superlu"})(self.chain)
        iterative = ConjugateGradient({"tolerance": 1e-12})(self.chain)

        self.assertTrue(np.allclose(iterative.flat(), direct.flat(), rtol=1e-8))
        self.assertLess(iterative.residual, 1e-10)
        self.assertEqual(iterative.flat()[0], 0.0)

    def testConvergence(self):
        """
        Test conjugate gradient reports non-convergence
        """

        with self.assertRaises(SolverError):
            ConjugateGradient({"maxiter": 1})(self.springs)

        system = System(csr_matrix(np.array([[1.0, 0.0], [0.0, -1.0]])), [1.0, 1.0], [])
        with self.assertRaises(SolverError):
            ConjugateGradient()(system)

    def testZeroLoad(self):
        """
        Test zero load returns zero displacements without solving
        """

        system = System(csr_matrix(np.array([[2.0, -1.0], [-1.0, 1.0]])), [0.0, 0.0], [])

        with patch.object(Direct, "solve") as solve:
            displacements = Direct()(system)
            solve.assert_not_called()

        self.assertFalse(np.any(displacements.values))

    def testSingular(self):
        """
        Test singular matrices report the failing degree of freedom
        """

        system = System(diags([1.0, 1e-20, 1.0, 1.0, 1.0, 1.0]).tocsr(), np.ones(6), [])
        with self.assertRaises(SingularSystemError) as context:
            Direct({"backend": "superlu"})(system)

        self.assertEqual(context.exception.dof, 1)
        self.assertIn("vertex 0, component uy", str(context.exception))

        system = System(csr_matrix(np.array([[1.0, 1.0], [1.0, 1.0]])), [1.0, 2.0], [])
        with self.assertRaises(SingularSystemError):
            Direct({"backend": "superlu"})(system)

    def testFallback(self):
        """
        Test out of memory factorizations fall back to conjugate gradient
        """

        with patch.object(Direct, "superlu", side_effect=MemoryError):
            displacements = Direct({"backend": "superlu", "tolerance": 1e-12})(self.springs)

        self.assertTrue(np.allclose(displacements.flat(), [1.0, 2.0]))

    def testCholmod(self):
        """
        Test requesting CHOLMOD without scikit-sparse
        """

        with patch("walltension.shell.solver.direct.CHOLMOD", False):
            with self.assertRaises(ImportError):
                Direct({"backend": "cholmod"})(self.springs)

    def testFactory(self):
        """
        Test solver factory
        """

        self.assertIsInstance(SolverFactory.create(), Direct)
        self.assertIsInstance(SolverFactory.create({"method": "direct"}), Direct)
        self.assertIsInstance(SolverFactory.create({"method": "cg"}), ConjugateGradient)

        solver = SolverFactory.create({"method": "walltension.shell.solver.cg.ConjugateGradient", "tolerance": 1e-6})
        self.assertIsInstance(solver, ConjugateGradient)
        self.assertEqual(solver.config["tolerance"], 1e-6)

        with self.assertRaises(ImportError):
            SolverFactory.create({"method": "walltension.shell.solver.Missing"})

    def testNotImplemented(self):
        """
        Test base solver has no solve method
        """

        with self.assertRaises(NotImplementedError):
            Solver()(self.springs)
