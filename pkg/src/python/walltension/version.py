"""
Version strings
"""

# Current version tag
__version__ = "1.0.0"

# Current run configuration schema version
__schema__ = 1
