"""
Console module
"""

import json

from rich import box
from rich.console import Console as RichConsole
from rich.table import Table

from ..app import Application, ConfigError, RunConfig
from ..geometry import MeshError
from ..shell import SingularSystemError, SolverError


class Console:
    """
    walltension command line console. Every command returns a process exit code: 0 success, 1 input/output or
    configuration error, 2 mesh validation error, 3 singular or failed solve, 4 comparison threshold exceeded.
    """

    # Exit codes
    OK, IOERROR, MESH, SINGULAR, THRESHOLD = 0, 1, 2, 3, 4

    def __init__(self, console=None, errors=None):
        """
        Creates a new Console.

        Args:
            console: optional rich console for results
            errors: optional rich console for error messages
        """

        self.console = console if console else RichConsole()
        self.errors = errors if errors else RichConsole(stderr=True)

    def __call__(self, args):
        """
        Runs a parsed command and maps errors to exit codes.

        Args:
            args: argparse namespace with a command attribute

        Returns:
            exit code
        """

        try:
            return getattr(self, args.command)(args)
        except MeshError as e:
            self.error(e, getattr(e, "diagnostics", None))
            return Console.MESH
        except (SingularSystemError, SolverError) as e:
            self.error(e)
            return Console.SINGULAR
        except (OSError, ConfigError, ValueError, KeyError, ImportError) as e:
            self.error(e)
            return Console.IOERROR

    def inspect(self, args):
        """
        Processes the inspect command.

        Args:
            args: command arguments
        """

        report = Application({"weld": args.weld}).inspect(args.path)
        self.output(report.todict(), args.json, f"Mesh quality: {args.path}")

        return Console.OK

    def remesh(self, args):
        """
        Processes the remesh command.

        Args:
            args: command arguments
        """

        application = Application({"weld": args.weld})
        before, after = application.remesh(args.path, args.target, args.out, args.iterations)

        table = Table(box=box.SQUARE, style="#03a9f4", title=f"Remeshed {args.path} to {args.out}")
        for column in ("metric", "before", "after"):
            table.add_column(column)

        for key, value in before.todict().items():
            table.add_row(key, self.render(value), self.render(after.todict()[key]))

        self.console.print(table)
        return Console.OK

    def solve(self, args):
        """
        Processes the solve command.

        Args:
            args: command arguments
        """

        application = self.application(args)
        bundle = application.solve()
        bundle.save(application.config["output"])

        self.output(bundle.summary(), args.json, f"Wall tension: {application.config['output']}")
        return Console.OK

    def compare(self, args):
        """
        Processes the compare command.

        Args:
            args: command arguments
        """

        application = Application({"ranks": {"min": args.rank_min}})
        comparison = application.compare(args.a, args.b, field=args.field, weighted=not args.unweighted)

        result = {**comparison.todict(), "threshold": args.threshold, "passed": comparison.passes(args.threshold)}
        self.output(result, args.json, f"Compare {args.a} vs {args.b}")

        return Console.OK if result["passed"] else Console.THRESHOLD

    def converge(self, args):
        """
        Processes the converge command.

        Args:
            args: command arguments
        """

        application = self.application(args)
        report, table = application.converge(args.sizes, args.field, args.threshold, args.rank_min)

        self.table(table, f"Convergence of {args.field}: converged={report.converged()}, at={report.convergedat()}")
        return Console.OK

    def points(self, args):
        """
        Processes the points command.

        Args:
            args: command arguments
        """

        table = self.application(args).points(args.counts)
        self.table(table, "Through-thickness point study")

        return Console.OK

    def generate(self, args):
        """
        Processes the generate command.

        Args:
            args: command arguments
        """

        mesh = Application().generate(args.benchmark, args.out, args.edge)
        self.console.print(f"Wrote {mesh.trianglecount()} triangle(s) to {args.out}", style="#03a9f4")

        return Console.OK

    def application(self, args):
        """
        Creates an Application from a configuration file and command line overrides.

        Args:
            args: command arguments

        Returns:
            Application
        """

        config = RunConfig(args.config).update(
            output=args.out,
            flip=True if args.flip else None,
            deterministic=True if args.deterministic else None,
            threads=args.threads,
            pressure=(float(args.pressure[0]), args.pressure[1]) if args.pressure else None,
        )

        return Application(config)

    def output(self, data, asjson, title):
        """
        Prints a dictionary as JSON or as a table.

        Args:
            data: dictionary
            asjson: prints JSON if True
            title: table title
        """

        if asjson:
            self.console.print_json(json.dumps(data, sort_keys=True))
            return

        table = Table(box=box.SQUARE, style="#03a9f4", title=title)
        table.add_column("name")
        table.add_column("value")

        for key, value in data.items():
            if isinstance(value, dict):
                for name, x in value.items():
                    table.add_row(f"{key}.{name}", self.render(x))
            else:
                table.add_row(key, self.render(value))

        self.console.print(table)

    def table(self, frame, title):
        """
        Prints a DataFrame as a table.

        Args:
            frame: pandas DataFrame
            title: table title
        """

        table = Table(box=box.SQUARE, style="#03a9f4", title=title)
        for column in frame.columns:
            table.add_column(str(column))

        for row in frame.itertuples(index=False):
            table.add_row(*(self.render(x) for x in row))

        self.console.print(table)

    def error(self, error, diagnostics=None):
        """
        Prints an error message with optional diagnostics.

        Args:
            error: exception
            diagnostics: optional list of diagnostic strings
        """

        self.errors.print(f"Error: {error}", style="bold red", markup=False)
        for line in (diagnostics or [])[:20]:
            self.errors.print(f"  {line}", markup=False)

    def render(self, value):
        """
        Renders a value for table output.

        Args:
            value: value

        Returns:
            string
        """

        if isinstance(value, float):
            return f"{value:.6g}"

        return str(value)
