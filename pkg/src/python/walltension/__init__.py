"""
Base imports
"""

import logging

# Top-level imports
from .app import Application
from .geometry import Generator, Topology, TriangleMesh
from .io import STL

# Configure logging per standard Python library recommendations
logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())
