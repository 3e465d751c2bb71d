"""
Utility imports
"""

from .resolver import Resolver
