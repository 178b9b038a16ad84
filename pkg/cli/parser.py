import argparse
import sys

from cli.commands import (
    check_type,
    cmd_bound,
    cmd_deform,
    cmd_degree,
    cmd_factor,
    cmd_generate,
    cmd_types,
    cmd_verify,
)
from cli.error_handler import EXIT_INPUT
from config import APP_NAME, DEFAULT_SEED, VERSION
from loopalg.operations import VerifyMode


class CommandParser(argparse.ArgumentParser):
    """Usage errors exit with the input-error code, not argparse's 2"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", help="also write the JSON report to this path")


def _add_type(parser: argparse.ArgumentParser, help_text: str) -> None:
    parser.add_argument("--type", type=check_type, help=help_text)


def build_parser() -> argparse.ArgumentParser:
    parser = CommandParser(prog=APP_NAME, description="Extended solutions and harmonic maps into U_n")
    parser.add_argument("--version", action="version", version=f"{APP_NAME} {VERSION}")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=CommandParser)

    generate = subparsers.add_parser("generate", help="build an extended solution and its plane")
    generate.add_argument("source", choices=["canonical", "frenet", "cpn"])
    _add_type(generate, "uniton type, e.g. 2,1,0 (canonical)")
    generate.add_argument("--a", help="B_1 entry (1,2)")
    generate.add_argument("--b", help="B_1 entry (1,3)")
    generate.add_argument("--c", help="B_1 entry (2,3)")
    generate.add_argument("--entry", action="append", help="B_1 entry as r,s=expression; repeatable")
    generate.add_argument("--potential", help="potential JSON file (canonical)")
    generate.add_argument("--random", action="store_true", help="random polynomial B_1 (canonical)")
    generate.add_argument("--seed", type=int, default=DEFAULT_SEED)
    generate.add_argument("--row", help="Frenet table row, e.g. 2,1,0")
    generate.add_argument("--l", help="vector function, e.g. \"(z,0,1)\"")
    generate.add_argument("--m")
    generate.add_argument("--n")
    generate.add_argument("--input", help="Frenet data JSON file")
    generate.add_argument("--f", help="curve in C^n for the CP^(n-1) frame")
    generate.add_argument("--i", type=int, default=0, help="frame index")
    generate.add_argument("--out", help="directory for loop.json and plane.json")
    generate.set_defaults(handler=cmd_generate)

    verify = subparsers.add_parser("verify", help="extended-solution check of a loop or plane")
    verify.add_argument("input")
    verify.add_argument("--mode", choices=[m.value for m in VerifyMode], default=VerifyMode.GENERAL.value)
    _add_type(verify, "read a loop as the big-cell factor of this type")
    _add_output(verify)
    verify.set_defaults(handler=cmd_verify)

    degree = subparsers.add_parser("degree", help="Pluecker degree and related counts")
    degree.add_argument("input")
    _add_type(degree, "read a loop as the big-cell factor of this type")
    degree.add_argument("--schubert", action="store_true", help="also count meetings with the test subspace")
    degree.add_argument("--seed", type=int, default=DEFAULT_SEED)
    _add_output(degree)
    degree.set_defaults(handler=cmd_degree)

    factor = subparsers.add_parser("factor", help="uniton factorization and harmonic residual")
    factor.add_argument("input")
    _add_type(factor, "read a loop as the big-cell factor of this type")
    factor.add_argument("--center", default="0.5+0.5i")
    factor.add_argument("--half-width", type=float, default=0.2)
    factor.add_argument("--h", type=float, action="append", help="mesh width; repeat for a convergence study")
    factor.add_argument("--tolerance", type=float)
    factor.add_argument("--csv", help="write the phi grid here")
    _add_output(factor)
    factor.set_defaults(handler=cmd_factor)

    deform = subparsers.add_parser("deform", help="uniton-number-lowering deformation of (2,1,0) data")
    deform.add_argument("input")
    deform.add_argument("--m", type=int, default=10, help="grid t = j/m")
    deform.add_argument("--base-point", default="0")
    deform.add_argument("--witness", help="second data file; report whether both reach the same stratum")
    _add_output(deform)
    deform.set_defaults(handler=cmd_deform)

    types = subparsers.add_parser("types", help="list the uniton types for U_n")
    types.add_argument("--n", type=int, required=True)
    _add_output(types)
    types.set_defaults(handler=cmd_types)

    bound = subparsers.add_parser("bound", help="uniton number bounds, e.g. U_4 G2 SO_7")
    bound.add_argument("groups", nargs="+")
    _add_output(bound)
    bound.set_defaults(handler=cmd_bound)

    return parser
