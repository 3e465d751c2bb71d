"""
Factory module
"""

from ...util import Resolver

from .cg import ConjugateGradient
from .direct import Direct


class SolverFactory:
    """
    Methods to create linear solvers.
    """

    @staticmethod
    def create(config=None):
        """
        Create a Solver.

        Args:
            config: solver configuration, method is "direct", "cg" or a class path

        Returns:
            Solver
        """

        config = config if config is not None else {}
        method = config.get("method", "direct")

        if method == "direct":
            return Direct(config)
        if method == "cg":
            return ConjugateGradient(config)

        return SolverFactory.resolve(method, config)

    @staticmethod
    def resolve(method, config):
        """
        Attempt to resolve a custom solver.

        Args:
            method: solver class path
            config: solver configuration

        Returns:
            Solver
        """

        try:
            return Resolver()(method)(config)
        except Exception as e:
            raise ImportError(f"Unable to resolve solver method: '{method}'") from e
