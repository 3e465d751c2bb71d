"""
Recovery module
"""

import logging

import numpy as np

from ..shell import Execute, ShellElement
from .field import SurfaceField
from .resultants import StressResultants
from .tension import Tension

# Logging configuration
logger = logging.getLogger(__name__)


class Recovery:
    """
    Recovers stress resultants, principal stress layers and wall tension fields from solved displacements.
    """

    # Layer name to relative depth through the thickness
    LAYERS = {"inner": 0.0, "mid": 0.5, "outer": 1.0}

    def __init__(self, model, displacements, threads=1, chunk=4096):
        """
        Creates a new Recovery.

        Args:
            model: ShellModel
            displacements: Displacements solving model
            threads: number of threads
            chunk: number of elements per work unit
        """

        if displacements.values.shape[0] != model.mesh.vertexcount():
            raise ValueError(f"Displacements cover {displacements.values.shape[0]} vertices, mesh has {model.mesh.vertexcount()}")

        self.model = model
        self.displacements = displacements
        self.threads = threads
        self.chunk = chunk

        # Lazily computed resultants
        self.cache = None

    def resultants(self):
        """
        Computes per-element stress resultants at element centroids. Membrane forces are N = t C e from the constant
        membrane strain, bending moments are M = t^3 / 12 C k from the centroid curvature.

        Returns:
            StressResultants
        """

        if self.cache is None:
            count = self.model.mesh.trianglecount()
            args = [(start, min(start + self.chunk, count)) for start in range(0, count, self.chunk)]

            with Execute(self.threads) as execute:
                results = execute.run("thread" if self.threads > 1 else None, self.elements, args)

            membrane = np.concatenate([x for x, _ in results]) if results else np.zeros((0, 3))
            bending = np.concatenate([x for _, x in results]) if results else np.zeros((0, 3))
            self.cache = StressResultants(membrane, bending)

        return self.cache

    def elements(self, start, end):
        """
        Computes the resultants of a range of elements.

        Args:
            start: first element
            end: end element, exclusive

        Returns:
            (membrane, bending) with shape (m, 3) each
        """

        mesh, material, t = self.model.mesh, self.model.material, self.model.section.thickness
        triangles = mesh.triangles[start:end]

        rotation, coords = ShellElement.frame(mesh.vertices[triangles])

        # Element displacements in local axes, shape (m, 3 nodes, 2 parts, 3)
        values = self.displacements.values[triangles].reshape(-1, 3, 2, 3)
        local = np.einsum("mij,mnpj->mnpi", rotation, values)

        elasticity = material.elasticity()

        bmatrix, _ = ShellElement.membrane(coords)
        strain = np.einsum("mij,mj->mi", bmatrix, local[:, :, 0, :2].reshape(-1, 6))
        membrane = t * strain @ elasticity.T

        bending = np.stack([local[:, :, 0, 2], local[:, :, 1, 0], local[:, :, 1, 1]], axis=2).reshape(-1, 9)
        curvature = np.einsum("mij,mj->mi", ShellElement.bending(coords), bending)
        moments = t**3 / 12.0 * curvature @ elasticity.T

        return membrane, moments

    def stress(self, layer):
        """
        Per-element maximum principal stress at a layer.

        Args:
            layer: "inner", "mid" or "outer"

        Returns:
            stresses in MPa per element
        """

        if layer not in Recovery.LAYERS:
            raise ValueError(f"Layer must be one of {list(Recovery.LAYERS)}, found {layer}")

        t = self.model.section.thickness
        return Tension.principal(self.resultants().stress(Recovery.LAYERS[layer] * t, t))

    def surface(self, layer):
        """
        Maximum principal stress at a layer averaged to vertices.

        Args:
            layer: "inner", "mid" or "outer"

        Returns:
            SurfaceField
        """

        return SurfaceField.average(f"MPS_{layer}", self.stress(layer), self.model.mesh, "MPa")

    def integrated(self, points=None):
        """
        Wall tension by through-thickness quadrature averaged to vertices.

        Args:
            points: number of through-thickness points, defaults to the section's points

        Returns:
            SurfaceField
        """

        profile = self.resultants().profile(self.model.section, points)
        return SurfaceField.average("MPWT_integrated", Tension.integrated(profile), self.model.mesh, "N/mm")

    def midsurface(self):
        """
        Wall tension from mid-surface principal stress averaged to vertices.

        Returns:
            SurfaceField
        """

        return SurfaceField.average("MPWT_midsurface", Tension.midsurface(self.resultants()), self.model.mesh, "N/mm")

    def fields(self, points=None):
        """
        Computes every output field: principal stress at the inner, mid and outer layers, wall tension by quadrature and
        from the mid-surface, and the mean wall stress.

        Args:
            points: number of through-thickness points, defaults to the section's points

        Returns:
            list of SurfaceField
        """

        resultants, section, mesh = self.resultants(), self.model.section, self.model.mesh
        tension = Tension.integrated(resultants.profile(section, points))

        fields = [self.surface(layer) for layer in Recovery.LAYERS]
        fields.append(SurfaceField.average("MPWT_integrated", tension, mesh, "N/mm"))
        fields.append(self.midsurface())
        fields.append(SurfaceField.average("MPWS", Tension.mean(tension, section), mesh, "MPa"))

        logger.info("Recovered %d field(s) on %d vertices", len(fields), mesh.vertexcount())
        return fields
