"""
Format module
"""

import os


class Format:
    """
    Base class for file formats.
    """

    def load(self, path):
        """
        Loads data from path.

        Args:
            path: input file path

        Returns:
            loaded data
        """

        raise NotImplementedError

    def save(self, data, path):
        """
        Saves data to path.

        Args:
            data: data to save
            path: output file path
        """

        raise NotImplementedError

    def directory(self, path):
        """
        Creates the parent directory of path, if necessary.

        Args:
            path: output file path
        """

        output = os.path.dirname(path)
        if output:
            os.makedirs(output, exist_ok=True)
