"""
ShellElement module
"""

import numpy as np

from ..geometry import DEGENERATE, MeshError

# Drilling stiffness as a fraction of the mean bending rotation diagonal
DRILLING = 1e-3

# Area coordinates of the 3-point bending quadrature rule
GAUSS = np.array([[2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0], [1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0], [1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0]])

# Local degree of freedom indices per part, nodes ordered (u, v, w, rx, ry, rz)
MEMBRANE = np.array([0, 1, 6, 7, 12, 13])
BENDING = np.array([2, 3, 4, 8, 9, 10, 14, 15, 16])
DRILL = np.array([5, 11, 17])

# Corner pairs of the midside nodes
EDGES = ((0, 1), (1, 2), (2, 0))


class ShellElement:
    """
    Flat 3-node facet shell element. Superposes a constant strain membrane triangle, a discrete Kirchhoff bending triangle
    and a small drilling rotation stiffness, all formed in the element plane and rotated to global axes. Every method
    is batched over a leading triangle axis.
    """

    def __init__(self, material, section):
        """
        Creates a new ShellElement.

        Args:
            material: Material
            section: ShellSection
        """

        self.material = material
        self.section = section

    @staticmethod
    def frame(points):
        """
        Builds the element local frame. The first axis runs along the first edge, the normal is the unit cross product
        of the first two edges and the second axis completes a right-handed frame.

        Args:
            points: triangle corners, shape (3, 3) or (m, 3, 3)

        Returns:
            (rotation rows e1, e2, normal with shape (..., 3, 3), local 2D coordinates with shape (..., 3, 2))
        """

        points = np.asarray(points, dtype=np.float64)
        single = points.ndim == 2
        points = points.reshape(-1, 3, 3)

        first = points[:, 1] - points[:, 0]
        cross = np.cross(first, points[:, 2] - points[:, 0])
        areas = 0.5 * np.linalg.norm(cross, axis=1)

        degenerate = np.flatnonzero(areas < DEGENERATE)
        if degenerate.size:
            raise MeshError(f"Degenerate element(s) {degenerate[:10].tolist()}", [f"element {x} area {areas[x]:g}" for x in degenerate[:10]])

        e1 = first / np.linalg.norm(first, axis=1)[:, None]
        normal = cross / (2.0 * areas[:, None])
        e2 = np.cross(normal, e1)

        rotation = np.stack([e1, e2, normal], axis=1)
        coords = np.einsum("mij,mkj->mik", points - points[:, :1], rotation[:, :2])

        return (rotation[0], coords[0]) if single else (rotation, coords)

    @staticmethod
    def membrane(coords):
        """
        Constant strain triangle strain-displacement matrices.

        Args:
            coords: local coordinates, shape (m, 3, 2)

        Returns:
            (B with shape (m, 3, 6) mapping (u0, v0, u1, v1, u2, v2) to (exx, eyy, gxy), areas with shape (m,))
        """

        x, y = coords[..., 0], coords[..., 1]
        b = np.roll(y, -1, axis=1) - np.roll(y, -2, axis=1)
        c = np.roll(x, -2, axis=1) - np.roll(x, -1, axis=1)
        area = 0.5 * (b[:, 0] * c[:, 1] - b[:, 1] * c[:, 0])

        m = coords.shape[0]
        bmatrix = np.zeros((m, 3, 6))
        bmatrix[:, 0, 0::2] = b
        bmatrix[:, 1, 1::2] = c
        bmatrix[:, 2, 0::2] = c
        bmatrix[:, 2, 1::2] = b

        return bmatrix / (2.0 * area[:, None, None]), area

    @staticmethod
    def bending(coords, point=None):
        """
        Discrete Kirchhoff triangle curvature-displacement matrices. Slopes are interpolated quadratically from the corners
        and the edge midpoints, where the Kirchhoff constraint and a cubic deflection along each edge fix the midside
        slopes in terms of the corner values.

        Args:
            coords: local coordinates, shape (m, 3, 2)
            point: area coordinates of the evaluation point, defaults to the centroid

        Returns:
            B with shape (m, 3, 9) mapping (w, rx, ry) per corner to curvatures (kxx, kyy, 2kxy)
        """

        point = np.full(3, 1.0 / 3.0) if point is None else np.asarray(point, dtype=np.float64)
        l1, l2, l3 = point
        m = coords.shape[0]

        # Corner slopes (dw/dx, dw/dy) = (-ry, rx)
        corners = np.zeros((3, 2, 9))
        for i in range(3):
            corners[i, 0, 3 * i + 2] = -1.0
            corners[i, 1, 3 * i + 1] = 1.0

        # Nodal slope operators: 3 corners followed by 3 midsides
        slopes = np.zeros((m, 6, 2, 9))
        slopes[:, :3] = corners
        for k, (i, j) in enumerate(EDGES):
            edge = coords[:, j] - coords[:, i]
            length = np.linalg.norm(edge, axis=1)
            s = edge / length[:, None]

            projection = np.eye(2) - 1.5 * np.einsum("mi,mj->mij", s, s)
            midside = 0.5 * np.einsum("mij,jk->mik", projection, corners[i] + corners[j])
            midside[:, :, 3 * j] += 1.5 * s / length[:, None]
            midside[:, :, 3 * i] -= 1.5 * s / length[:, None]
            slopes[:, 3 + k] = midside

        # Quadratic shape function derivatives with respect to (l2, l3)
        derivatives = np.array(
            [
                [1.0 - 4.0 * l1, 4.0 * l2 - 1.0, 0.0, 4.0 * (l1 - l2), 4.0 * l3, -4.0 * l3],
                [1.0 - 4.0 * l1, 0.0, 4.0 * l3 - 1.0, -4.0 * l2, 4.0 * l2, 4.0 * (l1 - l3)],
            ]
        )

        jacobian = np.stack([coords[:, 1] - coords[:, 0], coords[:, 2] - coords[:, 0]], axis=1)
        gradients = np.einsum("mij,jk->mik", np.linalg.inv(jacobian), derivatives)

        # Slope gradients, shape (m, slope component, direction, 9)
        grad = np.einsum("mdk,mkcn->mcdn", gradients, slopes)

        bmatrix = np.empty((m, 3, 9))
        bmatrix[:, 0] = -grad[:, 0, 0]
        bmatrix[:, 1] = -grad[:, 1, 1]
        bmatrix[:, 2] = -(grad[:, 0, 1] + grad[:, 1, 0])

        return bmatrix

    @staticmethod
    def drilling(coords):
        """
        Rows mapping local element displacements to the in-plane rotation (dv/dx - du/dy) / 2.

        Args:
            coords: local coordinates, shape (m, 3, 2)

        Returns:
            shape (m, 18)
        """

        bmatrix, _ = ShellElement.membrane(coords)

        rows = np.zeros((coords.shape[0], 18))
        rows[:, MEMBRANE[0::2]] = -0.5 * bmatrix[:, 2, 0::2]
        rows[:, MEMBRANE[1::2]] = 0.5 * bmatrix[:, 2, 1::2]

        return rows

    @staticmethod
    def rotate(stiffness, rotation):
        """
        Rotates local element matrices to global axes.

        Args:
            stiffness: local matrices, shape (m, 18, 18)
            rotation: frame rows, shape (m, 3, 3)

        Returns:
            global matrices, shape (m, 18, 18)
        """

        m = stiffness.shape[0]
        blocks = stiffness.reshape(m, 3, 2, 3, 3, 2, 3)
        return np.einsum("mki,mapkbql,mlj->mapibqj", rotation, blocks, rotation).reshape(m, 18, 18)

    def stiffness(self, points):
        """
        Global stiffness matrix of a single triangle.

        Args:
            points: triangle corners, shape (3, 3)

        Returns:
            18x18 symmetric matrix
        """

        return self.stiffnesses(np.asarray(points, dtype=np.float64)[None])[0]

    def stiffnesses(self, corners):
        """
        Global stiffness matrices of a batch of triangles.

        Args:
            corners: triangle corners, shape (m, 3, 3)

        Returns:
            shape (m, 18, 18)
        """

        rotation, coords = ShellElement.frame(np.asarray(corners, dtype=np.float64).reshape(-1, 3, 3))
        elasticity, t = self.material.elasticity(), self.section.thickness
        m = coords.shape[0]

        local = np.zeros((m, 18, 18))

        # Membrane
        bmatrix, area = ShellElement.membrane(coords)
        membrane = t * area[:, None, None] * np.einsum("mki,kl,mlj->mij", bmatrix, elasticity, bmatrix)
        local[:, MEMBRANE[:, None], MEMBRANE[None]] += membrane

        # Bending
        rigidity = elasticity * t**3 / 12.0
        bending = np.zeros((m, 9, 9))
        for point in GAUSS:
            bmatrix = ShellElement.bending(coords, point)
            bending += (area / 3.0)[:, None, None] * np.einsum("mki,kl,mlj->mij", bmatrix, rigidity, bmatrix)
        local[:, BENDING[:, None], BENDING[None]] += bending

        # Drilling penalty on (rz - in-plane rotation) at each node
        scale = DRILLING * np.diagonal(bending, axis1=1, axis2=2)[:, [1, 2, 4, 5, 7, 8]].mean(axis=1)
        rows = ShellElement.drilling(coords)
        for index in DRILL:
            g = -rows
            g[:, index] += 1.0
            local += scale[:, None, None] * np.einsum("mi,mj->mij", g, g)

        return ShellElement.rotate(local, rotation)
