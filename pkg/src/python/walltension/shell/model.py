"""
ShellModel module
"""

import logging

from .constraints import ConstraintSet

# Logging configuration
logger = logging.getLogger(__name__)


class ShellModel:
    """
    Complete shell finite element problem: analysis mid-surface, material, section, pressure load and constraints.
    """

    @staticmethod
    def create(surface, material, section, load, policy="auto", vertices=None):
        """
        Builds a model from an outward oriented input surface. When the input is the inner (lumen) surface, the analysis
        mesh is the input offset outward by half the thickness.

        Args:
            surface: input TriangleMesh, oriented outward
            material: Material
            section: ShellSection
            load: LoadCase
            policy: clamp policy
            vertices: clamped vertices for the explicit policy

        Returns:
            ShellModel
        """

        mesh = surface.offset(section.offset())
        constraints = ConstraintSet.create(mesh, policy, vertices)

        return ShellModel(mesh, material, section, load, constraints, surface)

    def __init__(self, mesh, material, section, load, constraints, surface=None):
        """
        Creates a new ShellModel.

        Args:
            mesh: analysis mid-surface TriangleMesh
            material: Material
            section: ShellSection
            load: LoadCase
            constraints: ConstraintSet
            surface: input surface, defaults to mesh
        """

        self.mesh = mesh
        self.material = material
        self.section = section
        self.load = load
        self.constraints = constraints
        self.surface = surface if surface is not None else mesh

    def __repr__(self):
        return f"ShellModel({self.mesh}, {self.material}, {self.section}, {self.load}, {self.constraints})"

    def dofs(self):
        """
        Number of global degrees of freedom, 6 per vertex.

        Returns:
            int
        """

        return 6 * self.mesh.vertexcount()

    def update(self, **kwargs):
        """
        Creates a copy of this model with selected components replaced.

        Args:
            kwargs: mesh, material, section, load, constraints or surface

        Returns:
            ShellModel
        """

        values = {
            "mesh": self.mesh,
            "material": self.material,
            "section": self.section,
            "load": self.load,
            "constraints": self.constraints,
            "surface": self.surface,
        }

        return ShellModel(**{**values, **kwargs})
