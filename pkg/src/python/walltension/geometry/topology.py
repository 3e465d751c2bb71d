"""
Topology module
"""

import logging

import numpy as np

from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import breadth_first_order, connected_components

from .errors import MeshError, NonManifoldError, OrientationError
from .loop import BoundaryLoop
from .mesh import DEGENERATE

# Logging configuration
logger = logging.getLogger(__name__)


class Topology:
    """
    Edge connectivity of a triangle mesh. Detects boundary rims, checks manifoldness and winding and orients surfaces outward.
    """

    def __init__(self, mesh):
        """
        Creates a new Topology.

        Args:
            mesh: TriangleMesh
        """

        self.mesh = mesh

        # Directed half-edges, half-edge h belongs to triangle h // 3
        self.halfedges = mesh.triangles[:, [0, 1, 1, 2, 2, 0]].reshape(-1, 2)

        # Unique undirected edges and the number of incident triangles
        keys = np.sort(self.halfedges, axis=1)
        if keys.shape[0]:
            self.edges, inverse, self.counts = np.unique(keys, axis=0, return_inverse=True, return_counts=True)
            self.inverse = inverse.reshape(-1)
        else:
            self.edges, self.inverse, self.counts = np.zeros((0, 2), dtype=np.int64), np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)

    def nonmanifold(self):
        """
        Edges shared by more than two triangles.

        Returns:
            array of shape (k, 2)
        """

        return self.edges[self.counts > 2]

    def boundaryedges(self):
        """
        Boundary half-edges, directed as traversed by their triangle.

        Returns:
            array of shape (k, 2)
        """

        return self.halfedges[self.counts[self.inverse] == 1]

    def boundaryvertices(self):
        """
        Vertices on at least one boundary edge.

        Returns:
            sorted vertex indices
        """

        return np.unique(self.boundaryedges().reshape(-1))

    def closed(self):
        """
        Checks if this mesh is watertight.

        Returns:
            True if there are no boundary edges
        """

        return not np.any(self.counts == 1)

    def pairs(self):
        """
        Gets the two half-edges of every interior edge.

        Returns:
            (first, second) half-edge indices
        """

        order = np.argsort(self.inverse, kind="stable")
        starts = np.concatenate([[0], np.cumsum(self.counts)[:-1]]).astype(np.int64)
        interior = starts[self.counts == 2]

        return order[interior], order[interior + 1]

    def oriented(self):
        """
        Checks winding consistency. The two triangles of every interior edge must traverse it in opposite directions.

        Returns:
            True if winding is consistent
        """

        first, second = self.pairs()
        return not np.any(self.halfedges[first, 0] == self.halfedges[second, 0])

    def components(self):
        """
        Labels edge-connected components.

        Returns:
            (count, per-triangle component labels)
        """

        count = self.mesh.trianglecount()
        first, second = self.pairs()
        graph = coo_matrix((np.ones(first.shape[0]), (first // 3, second // 3)), shape=(count, count))

        return connected_components(graph, directed=False)

    def loops(self):
        """
        Finds the closed boundary loops of this mesh.

        Returns:
            list of BoundaryLoop ordered by descending perimeter
        """

        self.manifold()

        edges = self.boundaryedges()
        if not edges.shape[0]:
            return []

        # Every boundary vertex must have exactly two boundary neighbors
        vertices, degree = np.unique(edges.reshape(-1), return_counts=True)
        if np.any(degree != 2):
            pinched = vertices[degree != 2]
            raise MeshError(
                f"Boundary is not a set of simple loops: {pinched.size} vertex(es) touch more than one rim",
                [f"vertex {x}" for x in pinched[:20]],
            )

        neighbors, outgoing = {}, {}
        for a, b in edges.tolist():
            neighbors.setdefault(a, []).append(b)
            neighbors.setdefault(b, []).append(a)
            outgoing[a] = b

        points, loops, visited = self.mesh.vertices, [], set()
        for start in vertices.tolist():
            if start in visited:
                continue

            # Walk starting along the traversal direction of the boundary half-edge
            cycle, previous = [start], start
            current = outgoing.get(start, neighbors[start][0])
            while current != start:
                cycle.append(current)
                a, b = neighbors[current]
                previous, current = current, b if a == previous else a

            visited.update(cycle)

            cycle = np.array(cycle, dtype=np.int64)
            length = np.linalg.norm(points[np.roll(cycle, -1)] - points[cycle], axis=1).sum()
            loops.append(BoundaryLoop(cycle, length))

        loops.sort(key=lambda loop: (-loop.length, int(loop.vertices.min())))

        logger.debug("Found %d boundary loop(s)", len(loops))
        return loops

    def orient(self, flip=False):
        """
        Orients the mesh consistently with outward normals. Winding is propagated across each connected component. Watertight
        components are flipped to positive signed volume. Open components use the triangle farthest from the component centroid
        and are flipped if its normal points toward the centroid.

        Args:
            flip: if True, reverses the final orientation

        Returns:
            TriangleMesh
        """

        self.manifold()

        mesh = self.mesh
        count = mesh.trianglecount()
        if not count:
            return mesh

        # Interior edge graph between triangles sharing an edge
        first, second = self.pairs()
        same = self.halfedges[first, 0] == self.halfedges[second, 0]
        a, b = first // 3, second // 3
        graph = coo_matrix((np.ones(2 * a.shape[0]), (np.concatenate([a, b]), np.concatenate([b, a]))), shape=(count, count)).tocsr()

        components, labels = connected_components(graph, directed=False)

        # Breadth first spanning forest, roots point to themselves
        ancestors = np.arange(count)
        for component in range(components):
            root = int(np.argmax(labels == component))
            order, predecessors = breadth_first_order(graph, root, directed=False, return_predecessors=True)
            ancestors[order[1:]] = predecessors[order[1:]]

        # Flip flag of each tree edge, looked up by (parent, child) key
        keys = np.concatenate([a * count + b, b * count + a])
        flags = np.concatenate([same, same])
        index = np.argsort(keys)
        keys, flags = keys[index], flags[index]

        nodes = np.flatnonzero(ancestors != np.arange(count))
        parity = np.zeros(count, dtype=bool)
        parity[nodes] = flags[np.searchsorted(keys, ancestors[nodes] * count + nodes)]

        # Accumulate parity up to each root by pointer jumping
        while np.any(ancestors != ancestors[ancestors]):
            parity, ancestors = parity ^ parity[ancestors], ancestors[ancestors]

        triangles = mesh.triangles.copy()
        triangles[parity] = triangles[parity][:, [0, 2, 1]]
        oriented = mesh.update(triangles=triangles)

        if not Topology(oriented).oriented():
            raise OrientationError("Orientation conflict, surface is not orientable")

        if parity.any():
            logger.debug("Flipped %d triangle(s) for consistent winding", int(parity.sum()))

        # Choose outward direction per component
        topology, reverse = Topology(oriented), np.zeros(count, dtype=bool)
        boundary = np.zeros(count, dtype=bool)
        boundary[np.flatnonzero(topology.counts[topology.inverse] == 1) // 3] = True

        for component in range(components):
            members = labels == component
            part = oriented.update(triangles=oriented.triangles[members])

            if not boundary[members].any():
                outward = part.volume() >= 0
            else:
                centroid = part.vertices[np.unique(part.triangles)].mean(axis=0)
                centroids = part.centroids()
                farthest = np.argmax(np.linalg.norm(centroids - centroid, axis=1))
                outward = np.dot(part.normals()[farthest], centroids[farthest] - centroid) >= 0

            if not outward:
                reverse[members] = True

        if flip:
            reverse = ~reverse

        triangles = oriented.triangles.copy()
        triangles[reverse] = triangles[reverse][:, [0, 2, 1]]

        return oriented.update(triangles=triangles)

    def manifold(self):
        """
        Raises a NonManifoldError if any edge is shared by more than two triangles.
        """

        edges = self.nonmanifold()
        if edges.shape[0]:
            raise NonManifoldError(edges)

    def validate(self):
        """
        Checks the full set of mesh invariants: valid distinct indices, no degenerate triangles, edge-manifold and
        consistent winding.

        Raises:
            MeshError with diagnostics on the first violated invariant
        """

        mesh = self.mesh
        triangles = mesh.triangles

        invalid = np.flatnonzero(np.any((triangles < 0) | (triangles >= mesh.vertexcount()), axis=1))
        if invalid.size:
            raise MeshError(f"{invalid.size} triangle(s) reference invalid vertex indices", [f"triangle {x}" for x in invalid[:20]])

        repeated = np.flatnonzero((triangles[:, 0] == triangles[:, 1]) | (triangles[:, 1] == triangles[:, 2]) | (triangles[:, 0] == triangles[:, 2]))
        if repeated.size:
            raise MeshError(f"{repeated.size} triangle(s) repeat a vertex", [f"triangle {x}" for x in repeated[:20]])

        degenerate = np.flatnonzero(mesh.areas() < DEGENERATE)
        if degenerate.size:
            raise MeshError(f"{degenerate.size} degenerate triangle(s)", [f"triangle {x}" for x in degenerate[:20]])

        self.manifold()

        if not self.oriented():
            first, second = self.pairs()
            conflicts = self.edges[self.inverse[first[self.halfedges[first, 0] == self.halfedges[second, 0]]]]
            raise MeshError(f"Inconsistent winding on {conflicts.shape[0]} edge(s)", [f"edge {a}-{b}" for a, b in conflicts[:20].tolist()])
