"""
Main module.
"""

import argparse
import logging
import sys

from rich.console import Console as RichConsole
from rich.logging import RichHandler

from ..geometry import Generator
from .base import Console


def parser():
    """
    Builds the command line parser.

    Returns:
        argparse.ArgumentParser
    """

    root = argparse.ArgumentParser(prog="walltension", description="Maximum principal wall tension of thin-walled vessel surfaces")
    root.add_argument("--verbose", action="store_true", help="log pipeline progress")

    commands = root.add_subparsers(dest="command", required=True)

    command = commands.add_parser("inspect", help="validate a mesh and print quality statistics")
    command.add_argument("path", help="input STL")
    command.add_argument("--weld", type=float, default=1e-5, help="weld tolerance in mm")
    command.add_argument("--json", action="store_true", help="print JSON")

    command = commands.add_parser("remesh", help="isotropic remeshing to a target edge length")
    command.add_argument("path", help="input STL")
    command.add_argument("--target", type=float, required=True, help="target edge length in mm")
    command.add_argument("--out", required=True, help="output STL")
    command.add_argument("--iterations", type=int, help="remeshing iterations")
    command.add_argument("--weld", type=float, default=1e-5, help="weld tolerance in mm")

    command = commands.add_parser("solve", help="solve a configured model and write results")
    overrides(command)
    command.add_argument("--json", action="store_true", help="print JSON summary")

    command = commands.add_parser("compare", help="compare two percentile curves")
    command.add_argument("a", help="reference curve CSV or result VTK")
    command.add_argument("b", help="compared curve CSV or result VTK")
    command.add_argument("--rank-min", type=float, default=5, help="lowest percentile rank compared")
    command.add_argument("--threshold", type=float, default=0.01, help="maximum allowed relative deviation")
    command.add_argument("--field", default="MPWT_midsurface", help="field read from VTK inputs")
    command.add_argument("--unweighted", action="store_true", help="count weighted percentiles for VTK inputs")
    command.add_argument("--json", action="store_true", help="print JSON")

    command = commands.add_parser("converge", help="mesh convergence study")
    overrides(command)
    command.add_argument("--sizes", type=float, nargs="+", required=True, help="element sizes in mm")
    command.add_argument("--field", default="MPS_inner", help="field compared across sizes")
    command.add_argument("--threshold", type=float, default=0.02, help="convergence threshold")
    command.add_argument("--rank-min", type=float, default=50, help="lowest percentile rank compared")

    command = commands.add_parser("points", help="through-thickness point study")
    overrides(command)
    command.add_argument("--counts", type=int, nargs="+", default=[3, 5, 7, 15], help="odd point counts")

    command = commands.add_parser("generate", help="write a benchmark surface")
    command.add_argument("benchmark", choices=sorted(Generator.DEFAULTS), help="benchmark name")
    command.add_argument("out", help="output STL")
    command.add_argument("--edge", type=float, help="target edge length in mm")

    return root


def overrides(command):
    """
    Adds configuration file and override arguments.

    Args:
        command: subcommand parser
    """

    command.add_argument("--config", required=True, help="run configuration file")
    command.add_argument("--out", help="output directory")
    command.add_argument("--flip", action="store_true", help="reverse the computed outward orientation")
    command.add_argument("--deterministic", action="store_true", help="bitwise reproducible outputs")
    command.add_argument("--threads", type=int, help="assembly and recovery threads")
    command.add_argument("--pressure", nargs=2, metavar=("VALUE", "UNIT"), help="pressure override, unit mmHg, kPa or MPa")


def main(argv=None):
    """
    Command line entry point.

    Args:
        argv: optional argument list, defaults to sys.argv

    Returns:
        exit code
    """

    try:
        args = parser().parse_args(argv)
    except SystemExit as e:
        return 1 if e.code else 0

    handler = RichHandler(console=RichConsole(stderr=True), show_path=False)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s", handlers=[handler], force=True)

    return Console()(args)


if __name__ == "__main__":
    sys.exit(main())
