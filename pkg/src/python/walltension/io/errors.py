"""
Format errors module
"""


class MeshFormatError(IOError):
    """
    Error raised when a mesh or field file is unreadable or malformed.
    """
