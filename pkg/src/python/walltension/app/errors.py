"""
Configuration errors module
"""


class ConfigError(ValueError):
    """
    Error raised when a run configuration has unknown keys, missing values or invalid values.
    """
