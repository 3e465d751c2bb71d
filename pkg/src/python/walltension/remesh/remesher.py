"""
Remesher module
"""

import logging

import numpy as np

from scipy.sparse import coo_matrix

from ..geometry import DEGENERATE, MeshError, Topology, TriangleMesh
from .errors import RemeshError
from .projector import Projector

# Logging configuration
logger = logging.getLogger(__name__)

# Smallest angle, in radians, that collapses and flips may introduce unless the affected triangles were already worse
MINANGLE = np.radians(20.0)

# Tangential smoothing step
LAMBDA = 0.5


class Remesher:
    """
    Isotropic explicit remeshing towards a target edge length. Each iteration splits long edges, collapses short edges,
    flips edges to equalize valence, smooths tangentially and projects back to the input surface. Boundary rims are kept:
    rim vertices only slide along their input polyline and rim topology never changes.
    """

    def __init__(self, params):
        """
        Creates a new Remesher.

        Args:
            params: RemeshParams
        """

        self.params = params

    def __call__(self, mesh):
        """
        Remeshes a surface.

        Args:
            mesh: input TriangleMesh

        Returns:
            remeshed TriangleMesh
        """

        params = self.params

        topology = Topology(mesh)
        topology.validate()
        loops = topology.loops()

        projector = Projector(mesh, loops)

        vertices, triangles = mesh.vertices.copy(), mesh.triangles.copy()
        rim = np.full(mesh.vertexcount(), -1, dtype=np.int64)
        for x, loop in enumerate(loops):
            rim[loop.vertices] = x

        logger.info("Remeshing %d triangle(s) to target edge %.4g mm, %d iteration(s)", mesh.trianglecount(), params.target, params.iterations)

        for iteration in range(params.iterations):
            vertices, triangles, rim, splits = self.split(vertices, triangles, rim)
            vertices, triangles, rim, collapses = self.collapse(vertices, triangles, rim)
            triangles, flips = self.flip(vertices, triangles, rim)
            vertices = self.smooth(vertices, triangles, rim, projector)

            logger.debug(
                "Iteration %d: %d split(s), %d collapse(s), %d flip(s), %d triangle(s)", iteration + 1, splits, collapses, flips, triangles.shape[0]
            )

        result = TriangleMesh(vertices, triangles, f"{mesh.provenance} remeshed to {params.target:g} mm".strip())
        self.check(result, len(loops))

        logger.info("Remeshed to %d triangle(s), mean edge %.4g mm", result.trianglecount(), result.edgelengths().mean())
        return result

    def split(self, vertices, triangles, rim):
        """
        Splits every edge longer than 4/3 of the target at its midpoint, repeating until no long edges remain. Triangles
        with one, two or three split edges are replaced by two, three or four triangles.

        Args:
            vertices: vertex coordinates
            triangles: triangles
            rim: rim index per vertex, -1 for interior vertices

        Returns:
            (vertices, triangles, rim, number of splits)
        """

        high, total = self.params.high(), 0
        for _ in range(16):
            topology = Topology(TriangleMesh(vertices, triangles))
            edges, inverse, counts = topology.edges, topology.inverse.reshape(-1, 3), topology.counts

            marked = np.linalg.norm(vertices[edges[:, 1]] - vertices[edges[:, 0]], axis=1) > high
            if not marked.any():
                break

            # Midpoint vertices, boundary edge midpoints stay on their rim
            count = int(marked.sum())
            mids = np.full(edges.shape[0], -1, dtype=np.int64)
            mids[marked] = vertices.shape[0] + np.arange(count)
            vertices = np.vstack([vertices, 0.5 * (vertices[edges[marked, 0]] + vertices[edges[marked, 1]])])
            rim = np.concatenate([rim, np.where(counts[marked] == 1, rim[edges[marked, 0]], -1)])

            flags = marked[inverse]
            number = flags.sum(axis=1)
            output = [triangles[number == 0]]

            # One split edge, rolled to edge ab
            a, b, c, e = Remesher.roll(triangles, inverse, number == 1, np.argmax(flags, axis=1))
            mab = mids[e[:, 0]]
            output.extend([np.stack([a, mab, c], axis=1), np.stack([mab, b, c], axis=1)])

            # Two split edges, rolled so that edge ca is kept
            a, b, c, e = Remesher.roll(triangles, inverse, number == 2, (np.argmin(flags, axis=1) + 1) % 3)
            mab, mbc = mids[e[:, 0]], mids[e[:, 1]]
            output.append(np.stack([mab, b, mbc], axis=1))

            # Remaining quad split along its shorter diagonal
            shorter = np.linalg.norm(vertices[a] - vertices[mbc], axis=1) <= np.linalg.norm(vertices[mab] - vertices[c], axis=1)
            output.extend(
                [
                    np.where(shorter[:, None], np.stack([a, mab, mbc], axis=1), np.stack([a, mab, c], axis=1)),
                    np.where(shorter[:, None], np.stack([a, mbc, c], axis=1), np.stack([mab, mbc, c], axis=1)),
                ]
            )

            # Three split edges
            a, b, c, e = Remesher.roll(triangles, inverse, number == 3, np.zeros(triangles.shape[0], dtype=np.int64))
            mab, mbc, mca = mids[e[:, 0]], mids[e[:, 1]], mids[e[:, 2]]
            output.extend(
                [
                    np.stack([a, mab, mca], axis=1),
                    np.stack([mab, b, mbc], axis=1),
                    np.stack([mca, mbc, c], axis=1),
                    np.stack([mab, mbc, mca], axis=1),
                ]
            )

            triangles = np.concatenate(output)
            total += count

        return vertices, triangles, rim, total

    @staticmethod
    def roll(triangles, inverse, mask, start):
        """
        Selects triangles and rotates their corners so that corner `start` comes first.

        Args:
            triangles: triangles
            inverse: edge id per triangle edge, edge k joins corner k and corner k + 1
            mask: triangle selection
            start: first corner per triangle

        Returns:
            (a, b, c, edge ids) for the selected triangles
        """

        index = (start[mask][:, None] + np.arange(3)[None]) % 3
        rolled = np.take_along_axis(triangles[mask], index, axis=1)
        edges = np.take_along_axis(inverse[mask], index, axis=1)

        return rolled[:, 0], rolled[:, 1], rolled[:, 2], edges

    def collapse(self, vertices, triangles, rim):
        """
        Collapses edges shorter than 4/5 of the target, shortest first. A collapse is skipped when it would break
        manifoldness (link condition), move a rim vertex, shrink a rim below 3 vertices, create an edge longer than 4/3 of
        the target, flip a triangle or create a sliver.

        Args:
            vertices: vertex coordinates
            triangles: triangles
            rim: rim index per vertex, -1 for interior vertices

        Returns:
            (vertices, triangles, rim, number of collapses)
        """

        low = self.params.low()

        vertices, triangles = vertices.copy(), triangles.copy()
        alive = np.ones(triangles.shape[0], dtype=bool)
        removed = np.zeros(vertices.shape[0], dtype=bool)
        incident = Remesher.incidence(vertices.shape[0], triangles)
        sizes = np.bincount(rim[rim >= 0], minlength=rim.max() + 1 if rim.size else 0)
        remaining = triangles.shape[0]

        edges = TriangleMesh(vertices, triangles).edges()
        lengths = np.linalg.norm(vertices[edges[:, 1]] - vertices[edges[:, 0]], axis=1)

        total = 0
        for a, b in edges[np.argsort(lengths, kind="stable")][np.sort(lengths) < low].tolist():
            if removed[a] or removed[b]:
                continue

            shared = incident[a] & incident[b]
            if not shared or np.linalg.norm(vertices[a] - vertices[b]) >= low:
                continue

            # Choose surviving vertex and its position
            if rim[a] >= 0 and rim[b] >= 0:
                if len(shared) != 1 or rim[a] != rim[b] or sizes[rim[a]] <= 3:
                    continue
                keep, drop, point = a, b, vertices[a]
            elif rim[a] >= 0:
                keep, drop, point = a, b, vertices[a]
            elif rim[b] >= 0:
                keep, drop, point = b, a, vertices[b]
            else:
                keep, drop, point = a, b, 0.5 * (vertices[a] + vertices[b])

            if not self.collapsible(vertices, triangles, incident, rim, keep, drop, point, shared):
                continue

            remaining -= len(shared)
            if remaining < 4:
                raise RemeshError("Remeshing would collapse the mesh below 4 triangles")

            # Remove the triangles of the collapsed edge
            for t in shared:
                alive[t] = False
                for v in triangles[t].tolist():
                    incident[v].discard(t)

            # Reconnect triangles of the dropped vertex
            for t in incident[drop]:
                row = triangles[t]
                row[row == drop] = keep
                incident[keep].add(t)

            incident[drop] = set()
            removed[drop] = True
            vertices[keep] = point
            if rim[drop] >= 0:
                sizes[rim[drop]] -= 1

            total += 1

        # Compact arrays
        triangles = triangles[alive]
        used = np.zeros(vertices.shape[0], dtype=bool)
        used[triangles.reshape(-1)] = True
        index = np.cumsum(used) - 1

        return vertices[used], index[triangles], rim[used], total

    def collapsible(self, vertices, triangles, incident, rim, keep, drop, point, shared):
        """
        Checks if the edge (keep, drop) can collapse into point.

        Args:
            vertices: vertex coordinates
            triangles: triangles
            incident: triangle sets per vertex
            rim: rim index per vertex
            keep: surviving vertex
            drop: removed vertex
            point: position of the surviving vertex
            shared: triangles of the collapsed edge

        Returns:
            True if the collapse is valid
        """

        # Link condition, common neighbors are exactly the opposite corners of the collapsed triangles
        opposite = {v for t in shared for v in triangles[t].tolist()} - {keep, drop}
        neighbors = Remesher.neighbors(triangles, incident, keep), Remesher.neighbors(triangles, incident, drop)
        if (neighbors[0] & neighbors[1]) != opposite:
            return False

        # Opposite corners lose one neighbor
        for v in opposite:
            if len(Remesher.neighbors(triangles, incident, v)) <= (2 if rim[v] >= 0 else 3):
                return False

        # No long edges
        others = np.array(sorted((neighbors[0] | neighbors[1]) - {keep, drop}), dtype=np.int64)
        if np.any(np.linalg.norm(vertices[others] - point, axis=1) > self.params.high()):
            return False

        # No flipped or sliver triangles
        changed = np.array(sorted((incident[keep] | incident[drop]) - shared), dtype=np.int64)
        if not changed.size:
            return False

        before = vertices[triangles[changed]]
        after = before.copy()
        rows = triangles[changed]
        after[(rows == keep) | (rows == drop)] = point

        return Remesher.valid(before, after)

    def flip(self, vertices, triangles, rim):
        """
        Flips interior edges when that moves the valences of the four involved vertices closer to 6, or 4 on rims.

        Args:
            vertices: vertex coordinates
            triangles: triangles
            rim: rim index per vertex

        Returns:
            (triangles, number of flips)
        """

        triangles = triangles.copy()
        topology = Topology(TriangleMesh(vertices, triangles))

        valence = np.bincount(topology.edges.reshape(-1), minlength=vertices.shape[0])
        target = np.where(rim >= 0, 4, 6)

        # Candidate edges from the current valences
        first, second = topology.pairs()
        a, b = topology.halfedges[first, 0], topology.halfedges[first, 1]
        c = triangles[first // 3, (first % 3 + 2) % 3]
        d = triangles[second // 3, (second % 3 + 2) % 3]

        candidates = np.stack([a, b], axis=1)[Remesher.gain(valence, target, a, b, c, d) > 0].tolist()

        incident, total = Remesher.incidence(vertices.shape[0], triangles), 0
        for a, b in candidates:
            shared = incident[a] & incident[b]
            if len(shared) != 2:
                continue

            # Orient as (a, b, c) and (b, a, d)
            t1, t2, c, d = None, None, None, None
            for t in shared:
                row = triangles[t].tolist()
                i = row.index(a)
                if row[(i + 1) % 3] == b:
                    t1, c = t, row[(i + 2) % 3]
                else:
                    t2, d = t, row[(i + 1) % 3]

            if t1 is None or t2 is None or c == d or incident[c] & incident[d]:
                continue

            if Remesher.gain(valence, target, a, b, c, d) <= 0:
                continue

            before = vertices[np.array([[a, b, c], [b, a, d]])]
            after = vertices[np.array([[a, d, c], [d, b, c]])]
            if not Remesher.valid(before, after, reference=Remesher.crosses(before).sum(axis=0)):
                continue

            triangles[t1], triangles[t2] = [a, d, c], [d, b, c]
            incident[a].discard(t2)
            incident[b].discard(t1)
            incident[c].add(t2)
            incident[d].add(t1)

            valence[[a, b]] -= 1
            valence[[c, d]] += 1
            total += 1

        return triangles, total

    def smooth(self, vertices, triangles, rim, projector):
        """
        Moves interior vertices towards the centroid of their neighbors within the tangent plane and rim vertices towards
        the centroid of their rim neighbors. Interior vertices are then projected to the input surface when projection is
        enabled. Rim vertices are always projected to their input rim.

        Args:
            vertices: vertex coordinates
            triangles: triangles
            rim: rim index per vertex
            projector: Projector on the input surface

        Returns:
            smoothed vertex coordinates
        """

        mesh = TriangleMesh(vertices, triangles)
        count = vertices.shape[0]

        centroids = Remesher.centroids(vertices, mesh.edges(), count)
        normals = mesh.vertexnormals()

        update = centroids - vertices
        update -= np.einsum("ij,ij->i", update, normals)[:, None] * normals

        interior, boundary = rim < 0, rim >= 0
        result = vertices.copy()
        result[interior] += LAMBDA * update[interior]

        if boundary.any():
            centroids = Remesher.centroids(vertices, Topology(mesh).boundaryedges(), count)
            result[boundary] += LAMBDA * (centroids[boundary] - vertices[boundary])
            result[boundary] = projector.rim(result[boundary], rim[boundary])

        if self.params.projection and interior.any():
            result[interior] = projector(result[interior])

        return result

    def check(self, mesh, loops):
        """
        Checks the remeshed surface.

        Args:
            mesh: remeshed TriangleMesh
            loops: expected number of boundary loops
        """

        if mesh.trianglecount() < 4:
            raise RemeshError(f"Remeshing collapsed the mesh to {mesh.trianglecount()} triangle(s)")

        topology = Topology(mesh)
        try:
            topology.validate()
            found = len(topology.loops())
        except MeshError as e:
            raise RemeshError(f"Remeshed surface is invalid: {e}", e.diagnostics) from e

        if found != loops:
            raise RemeshError(f"Boundary loop topology changed from {loops} to {found} loop(s)")

    @staticmethod
    def gain(valence, target, a, b, c, d):
        """
        Reduction of the total valence deviation when edge ab is flipped to edge cd.

        Args:
            valence: valence per vertex
            target: target valence per vertex
            a, b: edge vertices
            c, d: opposite vertices

        Returns:
            deviation before minus deviation after the flip
        """

        before = np.abs(valence[a] - target[a]) + np.abs(valence[b] - target[b]) + np.abs(valence[c] - target[c]) + np.abs(valence[d] - target[d])
        after = (
            np.abs(valence[a] - 1 - target[a])
            + np.abs(valence[b] - 1 - target[b])
            + np.abs(valence[c] + 1 - target[c])
            + np.abs(valence[d] + 1 - target[d])
        )

        return before - after

    @staticmethod
    def incidence(count, triangles):
        """
        Builds vertex to triangle incidence sets.

        Args:
            count: number of vertices
            triangles: triangles

        Returns:
            list of sets
        """

        incident = [set() for _ in range(count)]
        for t, row in enumerate(triangles.tolist()):
            for v in row:
                incident[v].add(t)

        return incident

    @staticmethod
    def neighbors(triangles, incident, vertex):
        """
        Vertices sharing a triangle with vertex.

        Args:
            triangles: triangles
            incident: triangle sets per vertex
            vertex: vertex index

        Returns:
            set of vertex indices
        """

        return set(triangles[list(incident[vertex])].reshape(-1).tolist()) - {vertex}

    @staticmethod
    def centroids(vertices, edges, count):
        """
        Uniform neighbor centroids over a set of edges. Vertices without edges keep their position.

        Args:
            vertices: vertex coordinates
            edges: edges, shape (k, 2)
            count: number of vertices

        Returns:
            centroids, shape (count, 3)
        """

        rows, columns = np.concatenate([edges[:, 0], edges[:, 1]]), np.concatenate([edges[:, 1], edges[:, 0]])
        adjacency = coo_matrix((np.ones(rows.shape[0]), (rows, columns)), shape=(count, count)).tocsr()
        degree = np.asarray(adjacency.sum(axis=1)).reshape(-1)

        centroids = vertices.copy()
        connected = degree > 0
        centroids[connected] = (adjacency @ vertices)[connected] / degree[connected, None]

        return centroids

    @staticmethod
    def crosses(corners):
        """
        Unnormalized normals of triangle corners.

        Args:
            corners: shape (m, 3, 3)

        Returns:
            shape (m, 3)
        """

        return np.cross(corners[:, 1] - corners[:, 0], corners[:, 2] - corners[:, 0])

    @staticmethod
    def minangle(corners):
        """
        Smallest interior angle of a set of triangles.

        Args:
            corners: shape (m, 3, 3)

        Returns:
            angle in radians
        """

        angles = []
        for x in range(3):
            u, v = corners[:, (x + 1) % 3] - corners[:, x], corners[:, (x + 2) % 3] - corners[:, x]
            angles.append(np.arctan2(np.linalg.norm(np.cross(u, v), axis=1), np.einsum("ij,ij->i", u, v)))

        return float(np.min(angles))

    @staticmethod
    def valid(before, after, reference=None):
        """
        Checks that modified triangles keep their orientation, are not degenerate and don't introduce new slivers.

        Args:
            before: triangle corners before the change, shape (m, 3, 3)
            after: triangle corners after the change, shape (k, 3, 3)
            reference: normal to compare against, defaults to each triangle's previous normal

        Returns:
            True if the change is valid
        """

        crosses = Remesher.crosses(after)
        if np.any(0.5 * np.linalg.norm(crosses, axis=1) < DEGENERATE):
            return False

        reference = Remesher.crosses(before) if reference is None else np.broadcast_to(reference, crosses.shape)
        if np.any(np.einsum("ij,ij->i", crosses, reference) <= 0):
            return False

        return Remesher.minangle(after) >= min(Remesher.minangle(before), MINANGLE)
