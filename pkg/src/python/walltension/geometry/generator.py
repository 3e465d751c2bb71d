"""
Generator module
"""

import numpy as np

from .errors import MeshError
from .mesh import TriangleMesh
from .topology import Topology
from .weld import Weld

# Golden ratio
PHI = (1.0 + np.sqrt(5.0)) / 2.0

# Unit icosahedron, faces wound counterclockwise seen from outside
ICOSAHEDRON = (
    np.array(
        [
            [-1, PHI, 0],
            [1, PHI, 0],
            [-1, -PHI, 0],
            [1, -PHI, 0],
            [0, -1, PHI],
            [0, 1, PHI],
            [0, -1, -PHI],
            [0, 1, -PHI],
            [PHI, 0, -1],
            [PHI, 0, 1],
            [-PHI, 0, -1],
            [-PHI, 0, 1],
        ],
        dtype=np.float64,
    ),
    np.array(
        [
            [0, 11, 5],
            [0, 5, 1],
            [0, 1, 7],
            [0, 7, 10],
            [0, 10, 11],
            [1, 5, 9],
            [5, 11, 4],
            [11, 10, 2],
            [10, 7, 6],
            [7, 1, 8],
            [3, 9, 4],
            [3, 4, 2],
            [3, 2, 6],
            [3, 6, 8],
            [3, 8, 9],
            [4, 9, 5],
            [2, 4, 11],
            [6, 2, 10],
            [8, 6, 7],
            [9, 8, 1],
        ],
        dtype=np.int64,
    ),
)


class Generator:
    """
    Analytic benchmark surfaces. All generated meshes are welded and oriented outward.
    """

    # Maximum rim pinch clearing passes when clipping
    PASSES = 10

    # Benchmark defaults, lengths in mm
    DEFAULTS = {
        "sphere": {"radius": 10.0, "edge": 0.5},
        "cylinder": {"radius": 5.0, "length": 40.0, "edge": 0.5},
        "bumpy": {"radius": 10.0, "edge": 0.5, "amplitude": 0.01},
        "bifurcation": {"radius": 10.0, "edge": 0.5, "angle": 30.0},
        "blob": {"radius": 3.0, "edge": 0.15, "height": 0.4, "width": 0.5, "angle": 25.0},
        "plate": {"width": 1.0, "height": 1.0, "edge": 0.25},
    }

    @staticmethod
    def create(config, edge=None):
        """
        Creates a benchmark mesh from a configuration dictionary.

        Args:
            config: dictionary with a "benchmark" name and optional generator parameters
            edge: optional target edge length, overrides the configuration

        Returns:
            TriangleMesh
        """

        config = dict(config)
        name = config.pop("benchmark", None)
        if name not in Generator.DEFAULTS:
            raise ValueError(f"Unknown benchmark '{name}', expected one of {sorted(Generator.DEFAULTS)}")

        unknown = set(config) - set(Generator.DEFAULTS[name])
        if unknown:
            raise ValueError(f"Unknown {name} parameter(s): {sorted(unknown)}")

        arguments = {**Generator.DEFAULTS[name], **config}
        if edge is not None:
            arguments["edge"] = edge

        method = "icosphere" if name == "sphere" else name
        return getattr(Generator, method)(**arguments)

    @staticmethod
    def icosphere(radius, edge):
        """
        Builds a geodesic sphere by subdividing the faces of an icosahedron and projecting to the sphere.

        Args:
            radius: sphere radius in mm
            edge: target edge length in mm

        Returns:
            TriangleMesh
        """

        if radius <= 0 or edge <= 0:
            raise ValueError("Radius and edge length must be positive")
        if edge > radius:
            raise ValueError(f"Target edge {edge} mm is larger than radius {radius} mm")

        # Icosahedron edge length at this radius
        base = radius / np.sin(2.0 * np.pi / 5.0)

        # Estimate frequency, then correct once with the measured mean edge
        frequency = max(1, int(round(1.1 * base / edge)))
        mesh = Generator.geodesic(radius, frequency)

        corrected = max(1, int(round(frequency * mesh.edgelengths().mean() / edge)))
        if corrected != frequency:
            mesh = Generator.geodesic(radius, corrected)

        return mesh.update(provenance=f"icosphere(radius={radius}, edge={edge})")

    @staticmethod
    def geodesic(radius, frequency):
        """
        Builds a geodesic sphere with a fixed subdivision frequency.

        Args:
            radius: sphere radius
            frequency: number of segments per icosahedron edge

        Returns:
            TriangleMesh
        """

        n = frequency
        corners, faces = ICOSAHEDRON
        corners = corners / np.linalg.norm(corners, axis=1)[:, None]

        # Barycentric grid of a single face
        grid = [(i, j) for i in range(n + 1) for j in range(n + 1 - i)]
        index = {x: k for k, x in enumerate(grid)}
        local = []
        for i, j in grid:
            if i + j <= n - 1:
                local.append([index[(i, j)], index[(i + 1, j)], index[(i, j + 1)]])
            if i + j <= n - 2:
                local.append([index[(i + 1, j)], index[(i + 1, j + 1)], index[(i, j + 1)]])

        grid, local = np.array(grid, dtype=np.float64) / n, np.array(local, dtype=np.int64)

        a, b, c = corners[faces[:, 0]], corners[faces[:, 1]], corners[faces[:, 2]]
        points = a[:, None] + grid[None, :, 0, None] * (b - a)[:, None] + grid[None, :, 1, None] * (c - a)[:, None]
        triangles = local[None] + (np.arange(faces.shape[0]) * grid.shape[0])[:, None, None]

        vertices, triangles = Weld(1e-9)(points.reshape(-1, 3), triangles.reshape(-1, 3))
        vertices = radius * vertices / np.linalg.norm(vertices, axis=1)[:, None]

        return Topology(TriangleMesh(vertices, triangles)).orient()

    @staticmethod
    def cylinder(radius, length, edge):
        """
        Builds an open tube along the z axis, centered at the origin, with staggered vertex rings so that triangles are
        close to equilateral.

        Args:
            radius: tube radius in mm
            length: tube length in mm
            edge: target edge length in mm

        Returns:
            TriangleMesh
        """

        if radius <= 0 or length <= 0 or edge <= 0:
            raise ValueError("Radius, length and edge length must be positive")

        around = max(3, int(round(2.0 * np.pi * radius / edge)))
        rings = max(1, int(round(length / (edge * np.sqrt(3.0) / 2.0))))

        j, k = np.meshgrid(np.arange(rings + 1), np.arange(around), indexing="ij")
        theta = 2.0 * np.pi * (k + 0.5 * (j % 2)) / around
        z = -length / 2.0 + length * j / rings
        vertices = np.stack([radius * np.cos(theta), radius * np.sin(theta), z], axis=-1).reshape(-1, 3)

        triangles = []
        for ring in range(rings):
            a = ring * around + np.arange(around)
            b = ring * around + (np.arange(around) + 1) % around
            c, d = a + around, b + around
            if ring % 2 == 0:
                triangles.extend([np.stack([a, b, c], axis=1), np.stack([b, d, c], axis=1)])
            else:
                triangles.extend([np.stack([a, b, d], axis=1), np.stack([a, d, c], axis=1)])

        return TriangleMesh(vertices, np.concatenate(triangles), f"cylinder(radius={radius}, length={length}, edge={edge})")

    @staticmethod
    def plate(width, height, edge):
        """
        Builds a flat rectangular patch in the z = 0 plane with normals along +z.

        Args:
            width: extent along x in mm
            height: extent along y in mm
            edge: target edge length in mm

        Returns:
            TriangleMesh
        """

        nx, ny = max(1, int(round(width / edge))), max(1, int(round(height / edge)))

        x, y = np.meshgrid(np.linspace(0.0, width, nx + 1), np.linspace(0.0, height, ny + 1), indexing="ij")
        vertices = np.stack([x, y, np.zeros_like(x)], axis=-1).reshape(-1, 3)

        i, j = np.meshgrid(np.arange(nx), np.arange(ny), indexing="ij")
        a = (i * (ny + 1) + j).reshape(-1)
        b, c, d = a + ny + 1, a + ny + 2, a + 1
        triangles = np.concatenate([np.stack([a, b, c], axis=1), np.stack([a, c, d], axis=1)])

        return TriangleMesh(vertices, triangles, f"plate(width={width}, height={height}, edge={edge})")

    @staticmethod
    def bumpy(radius, edge, amplitude=0.01):
        """
        Builds a sphere with a smooth radial perturbation r = R (1 + amplitude sin(3 polar) cos(2 azimuth)).

        Args:
            radius: mean radius in mm
            edge: target edge length in mm
            amplitude: relative perturbation amplitude

        Returns:
            TriangleMesh
        """

        mesh = Generator.icosphere(radius, edge)
        vertices = mesh.vertices

        polar = np.arccos(np.clip(vertices[:, 2] / radius, -1.0, 1.0))
        azimuth = np.arctan2(vertices[:, 1], vertices[:, 0])
        scale = 1.0 + amplitude * np.sin(3.0 * polar) * np.cos(2.0 * azimuth)

        return mesh.update(vertices=vertices * scale[:, None], provenance=f"bumpy(radius={radius}, edge={edge}, amplitude={amplitude})")

    @staticmethod
    def bifurcation(radius, edge, angle=30.0):
        """
        Builds a sphere clipped by three cones, one parent and two branch directions 120 degrees apart. The result has
        three rims, like a bifurcation aneurysm with its connecting vessels cut off.

        Args:
            radius: sphere radius in mm
            edge: target edge length in mm
            angle: cone half-angle in degrees

        Returns:
            TriangleMesh
        """

        s, c = np.sin(np.radians(60.0)), np.cos(np.radians(60.0))
        directions = np.array([[0.0, 0.0, -1.0], [s, 0.0, c], [-s, 0.0, c]])

        mesh = Generator.clip(Generator.icosphere(radius, edge), directions, angle)
        return mesh.update(provenance=f"bifurcation(radius={radius}, edge={edge}, angle={angle})")

    @staticmethod
    def blob(radius, edge, height=0.4, width=0.5, angle=25.0):
        """
        Builds an aneurysm-like sac: a sphere with a Gaussian bleb around +z and one clipped parent vessel opening at -z.

        Args:
            radius: sac radius in mm
            edge: target edge length in mm
            height: relative bleb height
            width: bleb width in radians
            angle: parent opening half-angle in degrees

        Returns:
            TriangleMesh
        """

        mesh = Generator.icosphere(radius, edge)
        vertices = mesh.vertices

        polar = np.arccos(np.clip(vertices[:, 2] / radius, -1.0, 1.0))
        scale = 1.0 + height * np.exp(-((polar / width) ** 2))
        mesh = mesh.update(vertices=vertices * scale[:, None])

        mesh = Generator.clip(mesh, np.array([[0.0, 0.0, -1.0]]), angle)
        return mesh.update(provenance=f"blob(radius={radius}, edge={edge}, height={height}, width={width}, angle={angle})")

    @staticmethod
    def clip(mesh, directions, angle):
        """
        Removes every triangle touching a vertex inside any of the cones around directions. Vertices where rims would
        pinch are cleared too, so that every rim is a simple loop.

        Args:
            mesh: TriangleMesh centered at the origin
            directions: cone axes, shape (k, 3)
            angle: cone half-angle in degrees

        Returns:
            TriangleMesh
        """

        units = mesh.vertices / np.linalg.norm(mesh.vertices, axis=1)[:, None]
        inside = np.any(units @ np.asarray(directions).T > np.cos(np.radians(angle)), axis=1)

        triangles = mesh.triangles
        keep = ~np.any(inside[triangles], axis=1)

        for attempt in range(Generator.PASSES + 1):
            clipped = mesh.update(triangles=triangles[keep])
            edges = Topology(clipped).boundaryedges()
            vertices, degree = np.unique(edges.reshape(-1), return_counts=True)
            pinched = vertices[degree > 2]
            if not pinched.size:
                break

            if attempt == Generator.PASSES:
                raise MeshError(f"Rims still pinched after {Generator.PASSES} clearing passes", [f"vertex {x}" for x in pinched[:20]])

            keep &= ~np.any(np.isin(triangles, pinched), axis=1)

        clipped = mesh.update(triangles=triangles[keep]).compact()
        if clipped.trianglecount() < 4:
            raise MeshError("Clipping removed the whole surface")

        return clipped
