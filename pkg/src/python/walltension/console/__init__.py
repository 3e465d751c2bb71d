"""
Console imports
"""

from .base import Console
