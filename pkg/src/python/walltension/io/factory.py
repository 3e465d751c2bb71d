"""
Factory module
"""

from .csv import CSV
from .stl import STL
from .vtk import VTK


class FormatFactory:
    """
    Methods to create file formats.
    """

    @staticmethod
    def create(path, **kwargs):
        """
        Creates a format for path using its file extension.

        Args:
            path: file path
            kwargs: additional format arguments

        Returns:
            Format
        """

        extension = path.lower().split(".")[-1]

        if extension == "stl":
            return STL(**kwargs)
        if extension == "vtk":
            return VTK()
        if extension == "csv":
            return CSV()

        raise ValueError(f"Unsupported file extension: '{extension}'")
