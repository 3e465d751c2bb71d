"""
Application module
"""

import logging
import os
import time

import pandas as pd

from ..fieldstat import ConvergenceReport, CurveComparison, PercentileCurve
from ..geometry import Generator, MeshQualityReport, Topology
from ..io import CSV, STL, VTK, FormatFactory
from ..recovery import Recovery, SurfaceField
from ..remesh import RemeshParams, Remesher
from ..shell import Assembler, ShellModel, SolverFactory
from .bundle import ResultBundle
from .config import RunConfig
from .errors import ConfigError

# Logging configuration
logger = logging.getLogger(__name__)


class Application:
    """
    Runs the wall tension pipeline: load or generate a surface, remesh, build the shell model, solve, recover fields and
    compare percentile curves.
    """

    # Units of output fields by name prefix
    UNITS = {"MPS": "MPa", "MPWS": "MPa", "MPWT": "N/mm"}

    def __init__(self, config=None):
        """
        Creates a new Application.

        Args:
            config: RunConfig, file path, inline document or dictionary
        """

        self.config = config if isinstance(config, RunConfig) else RunConfig(config)

    def mesh(self, size=None):
        """
        Builds the input surface. Benchmark meshes are regenerated at size, STL meshes are remeshed to size. Without a
        size, the configured remesh section applies.

        Args:
            size: optional target element size in mm

        Returns:
            outward oriented TriangleMesh
        """

        source = self.config["mesh"]
        if source is None:
            raise ConfigError("Configuration has no mesh")

        if isinstance(source, dict):
            mesh = Generator.create(source, edge=size)
            params = self.config.remesh() if size is None else None
        else:
            mesh = STL(self.config["weld"]).load(source)
            params = self.config.remesh(size)

        mesh = Topology(mesh).orient(flip=self.config["flip"])
        if params:
            mesh = Remesher(params)(mesh)

        return mesh

    def model(self, mesh):
        """
        Builds the shell model of an input surface.

        Args:
            mesh: outward oriented TriangleMesh

        Returns:
            ShellModel
        """

        clamp = self.config["clamp"]
        return ShellModel.create(
            mesh, self.config.material(), self.config.section(), self.config.load(), clamp["policy"], clamp.get("vertices")
        )

    def solve(self, mesh=None, points=None):
        """
        Solves the configured model.

        Args:
            mesh: optional input surface, defaults to mesh()
            points: optional number of through-thickness points, defaults to the section's points

        Returns:
            ResultBundle
        """

        mesh = mesh if mesh is not None else self.mesh()
        model = self.model(mesh)

        deterministic, solver = self.config["deterministic"], self.config["solver"]
        threads = int(solver["threads"])

        start = time.perf_counter()
        system = Assembler(model, threads=threads, deterministic=deterministic)()
        displacements = SolverFactory.create(dict(solver))(system)
        recovery = Recovery(model, displacements, threads=threads)
        fields = recovery.fields(points)
        seconds = time.perf_counter() - start

        statistics = {
            "dofs": model.dofs(),
            "residual": displacements.residual,
            "seconds": None if deterministic else seconds,
            "rims": model.constraints.rims,
            "policy": model.constraints.policy,
            "pressure": model.load.pressure,
            "thickness": model.section.thickness,
            "points": points if points else model.section.points,
        }

        logger.info("Solved %s in %.2fs", mesh.provenance, seconds)
        return ResultBundle(model.mesh, fields, MeshQualityReport.create(model.mesh), statistics)

    def inspect(self, path):
        """
        Loads and validates a mesh file.

        Args:
            path: STL path

        Returns:
            MeshQualityReport
        """

        mesh = STL(self.config["weld"]).load(path)
        Topology(mesh).validate()

        return MeshQualityReport.create(mesh)

    def remesh(self, path, target, output, iterations=None):
        """
        Remeshes a mesh file.

        Args:
            path: input STL path
            target: target edge length in mm
            output: output STL path
            iterations: optional number of iterations, defaults to the configured count

        Returns:
            (quality before, quality after)
        """

        mesh = STL(self.config["weld"]).load(path)
        configured = self.config["remesh"] or {}

        params = RemeshParams(target, iterations if iterations else configured.get("iterations", 10), configured.get("projection", True))
        result = Remesher(params)(mesh)
        STL().save(result, output)

        return MeshQualityReport.create(mesh), MeshQualityReport.create(result)

    def compare(self, a, b, rankmin=None, field="MPWT_midsurface", weighted=True):
        """
        Compares two percentile curves. Inputs are curve CSV files or VTK result files.

        Args:
            a: reference path
            b: compared path
            rankmin: lowest rank compared, defaults to the configured rank
            field: field read from VTK inputs
            weighted: area weighted percentiles for VTK inputs

        Returns:
            CurveComparison
        """

        rankmin = rankmin if rankmin is not None else self.config["ranks"]["min"]
        return CurveComparison.create(self.curve(a, field, weighted), self.curve(b, field, weighted), rankmin)

    def curve(self, path, field="MPWT_midsurface", weighted=True):
        """
        Reads a percentile curve from a curve CSV or a VTK result file.

        Args:
            path: input path
            field: field read from VTK inputs
            weighted: area weighted percentiles for VTK inputs

        Returns:
            PercentileCurve
        """

        reader = FormatFactory.create(path)
        if isinstance(reader, CSV):
            return reader.load(path)

        if isinstance(reader, VTK):
            mesh, fields = reader.load(path)
            if field not in fields:
                raise ConfigError(f"'{path}' has no field '{field}', found {sorted(fields)}")

            units = next(units for prefix, units in Application.UNITS.items() if field.startswith(prefix))
            return PercentileCurve.create(SurfaceField(field, fields[field], mesh.vertexareas(), units), weighted=weighted)

        raise ConfigError(f"'{path}' is not a curve CSV or VTK result file")

    def converge(self, sizes, field="MPS_inner", threshold=0.02, rankmin=50):
        """
        Runs a mesh convergence study. Every size is meshed, solved and written to its own output directory.

        Args:
            sizes: element sizes in mm
            field: field compared across sizes
            threshold: convergence threshold on the maximum relative deviation
            rankmin: lowest rank compared

        Returns:
            (ConvergenceReport, DataFrame with one row per refinement pair and solve seconds)
        """

        sizes = sorted({float(x) for x in sizes}, reverse=True)
        if len(sizes) < 2:
            raise ConfigError("A convergence study needs at least 2 distinct element sizes")

        curves, seconds = {}, {}
        for size in sizes:
            logger.info("Convergence run at %g mm", size)

            bundle = self.solve(self.mesh(size))
            bundle.save(os.path.join(self.config["output"], f"size_{size:g}"))

            curves[size] = bundle.curve(field)
            seconds[size] = bundle.statistics["seconds"]

        report = ConvergenceReport.create(curves, threshold, rankmin)

        table = report.dataframe()
        table["seconds"] = [seconds[x] for x in table["fine"]]

        path = os.path.join(self.config["output"], "convergence.csv")
        os.makedirs(self.config["output"], exist_ok=True)
        table.to_csv(path, index=False, float_format="%.12g")

        return report, table

    def points(self, counts):
        """
        Through-thickness point study. Solves once and compares wall tension by quadrature for each point count against
        the largest count.

        Args:
            counts: odd point counts >= 3

        Returns:
            DataFrame with points, deviation, rank and median columns
        """

        counts = sorted({int(x) for x in counts})
        if len(counts) < 2:
            raise ConfigError("A point study needs at least 2 distinct point counts")

        model = self.model(self.mesh())
        solver = self.config["solver"]
        threads = int(solver["threads"])

        system = Assembler(model, threads=threads, deterministic=self.config["deterministic"])()
        displacements = SolverFactory.create(dict(solver))(system)
        recovery = Recovery(model, displacements, threads=threads)

        curves = {}
        for count in counts:
            section = model.section.update(points=count)
            curves[count] = PercentileCurve.create(recovery.integrated(section.points))

        rankmin, reference = self.config["ranks"]["min"], curves[counts[-1]]

        rows = []
        for count in counts:
            comparison = CurveComparison.create(reference, curves[count], rankmin)
            rows.append({"points": count, "deviation": comparison.deviation, "rank": comparison.rank, "median": curves[count].value(50)})

        table = pd.DataFrame(rows, columns=["points", "deviation", "rank", "median"])

        path = os.path.join(self.config["output"], "points.csv")
        os.makedirs(self.config["output"], exist_ok=True)
        table.to_csv(path, index=False, float_format="%.12g")

        return table

    def generate(self, name, path, edge=None):
        """
        Writes a benchmark surface to an STL file.

        Args:
            name: benchmark name
            path: output STL path
            edge: optional target edge length in mm

        Returns:
            TriangleMesh
        """

        mesh = Generator.create({"benchmark": name}, edge)
        STL().save(mesh, path)

        return mesh
