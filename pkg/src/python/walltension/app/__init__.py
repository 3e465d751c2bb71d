"""
App imports
"""

from .base import Application
from .bundle import ResultBundle
from .config import RunConfig
from .errors import ConfigError
