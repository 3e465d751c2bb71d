"""
ConstraintSet module
"""

import logging
from itertools import combinations

import numpy as np

from ..geometry import Topology

# Logging configuration
logger = logging.getLogger(__name__)


class ConstraintSet:
    """
    Fixed degrees of freedom. Clamped vertices have all 6 degrees of freedom fixed. Additional single degrees of
    freedom support statically determinate rigid-body tie-downs.
    """

    # Clamp policies
    POLICIES = ("auto", "rims", "tiedown", "explicit")

    @staticmethod
    def create(mesh, policy="auto", vertices=None):
        """
        Derives constraints for mesh. The auto policy clamps every boundary rim of an open mesh and ties down a
        watertight mesh.

        Args:
            mesh: analysis TriangleMesh
            policy: auto, rims, tiedown or explicit
            vertices: clamped vertex indices for the explicit policy

        Returns:
            ConstraintSet
        """

        if policy not in ConstraintSet.POLICIES:
            raise ValueError(f"Clamp policy must be one of {ConstraintSet.POLICIES}, found {policy}")

        if policy == "explicit":
            return ConstraintSet.explicit(mesh, vertices)

        topology = Topology(mesh)
        loops = topology.loops()

        if policy == "rims" or (policy == "auto" and loops):
            return ConstraintSet.rims(loops)

        if policy == "tiedown" or topology.closed():
            return ConstraintSet.tiedown(mesh)

        return ConstraintSet(policy=policy)

    @staticmethod
    def rims(loops):
        """
        Clamps every vertex of every boundary loop.

        Args:
            loops: list of BoundaryLoop

        Returns:
            ConstraintSet
        """

        vertices = np.concatenate([loop.vertices for loop in loops]) if loops else []
        logger.info("Clamping %d rim(s) with %d vertex(es)", len(loops), len(vertices))

        return ConstraintSet(vertices, rims=len(loops), policy="rims")

    @staticmethod
    def explicit(mesh, vertices):
        """
        Clamps a list of vertices.

        Args:
            mesh: analysis TriangleMesh
            vertices: vertex indices

        Returns:
            ConstraintSet
        """

        vertices = np.asarray(vertices if vertices is not None else [], dtype=np.int64)
        if np.any(vertices < 0) or np.any(vertices >= mesh.vertexcount()):
            raise ValueError(f"Clamped vertex indices must be in [0, {mesh.vertexcount()})")

        return ConstraintSet(vertices, policy="explicit")

    @staticmethod
    def tiedown(mesh):
        """
        Removes the six rigid-body modes with the 3-2-1 rule. Vertex A is fixed in three directions, vertex B in two and
        vertex C in one. A is farthest from the centroid, B farthest from A and C farthest from line AB. Directions are
        chosen to best condition the restriction of the rigid-body modes.

        Args:
            mesh: analysis TriangleMesh

        Returns:
            ConstraintSet
        """

        points = mesh.vertices
        centroid = points.mean(axis=0)

        a = int(np.argmax(np.linalg.norm(points - centroid, axis=1)))
        b = int(np.argmax(np.linalg.norm(points - points[a], axis=1)))
        axis = points[b] - points[a]
        c = int(np.argmax(np.linalg.norm(np.cross(points - points[a], axis), axis=1)))

        modes = [ConstraintSet.modes(points[x], centroid) for x in (a, b, c)]

        best, dofs = -1.0, None
        for pair in combinations(range(3), 2):
            for single in range(3):
                rows = np.vstack([modes[0], modes[1][list(pair)], modes[2][[single]]])
                determinant = abs(np.linalg.det(rows))
                if determinant > best:
                    best = determinant
                    dofs = [6 * a, 6 * a + 1, 6 * a + 2, 6 * b + pair[0], 6 * b + pair[1], 6 * c + single]

        logger.info("Tie-down at vertices %d, %d, %d", a, b, c)
        return ConstraintSet(dofs=dofs, policy="tiedown")

    @staticmethod
    def modes(point, centroid):
        """
        Displacement of a point under the six unit rigid-body modes, translations first then rotations about the centroid.

        Args:
            point: point
            centroid: rotation center

        Returns:
            3 x 6 matrix, rows are displacement components
        """

        arm = point - centroid
        rotations = np.cross(np.eye(3), arm)
        return np.hstack([np.eye(3), rotations.T])

    def __init__(self, vertices=None, dofs=None, rims=0, policy=None):
        """
        Creates a new ConstraintSet.

        Args:
            vertices: fully clamped vertex indices
            dofs: additional fixed global degrees of freedom
            rims: number of clamped boundary loops
            policy: policy that derived these constraints
        """

        self.vertices = np.unique(np.asarray(vertices if vertices is not None else [], dtype=np.int64))
        self.dofs = np.unique(np.asarray(dofs if dofs is not None else [], dtype=np.int64))
        self.rims = rims
        self.policy = policy

    def __repr__(self):
        return f"ConstraintSet(policy={self.policy}, vertices={self.vertices.size}, dofs={self.dofs.size}, rims={self.rims})"

    def indices(self):
        """
        All fixed global degrees of freedom.

        Returns:
            sorted array of degree of freedom indices
        """

        clamped = (6 * self.vertices[:, None] + np.arange(6)[None]).reshape(-1)
        return np.union1d(clamped, self.dofs).astype(np.int64)

    def empty(self):
        """
        Checks if no degree of freedom is fixed.

        Returns:
            True if there are no constraints
        """

        return not self.vertices.size and not self.dofs.size
