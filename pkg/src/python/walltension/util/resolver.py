"""
Resolver module
"""

import importlib


class Resolver:
    """
    Resolves a Python class path
    """

    def __call__(self, path):
        """
        Class to resolve.

        Args:
            path: path to class

        Returns:
            class
        """

        module, name = path.rsplit(".", 1)
        return getattr(importlib.import_module(module), name)
