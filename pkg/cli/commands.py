"""
Command-Line Front End

The ``midr`` program. Every command parses its expression arguments for the
dimension given by ``--dim`` and prints a canonical result, or a JSON document
with ``--json``.

Commands:
    decompose <expr>            finite m-irreducible decomposition
    recompose <expr>            sum of boxes equal to the expression
    member <monomial> <expr>    membership test
    contains <exprA> <exprB>    does A contain B; prints a witness when it does not
    equal <exprA> <exprB>       equality of ideals
    irreducible <expr>          m-irreducibility test, with a factorization when reducible
    simplify <expr>             irredundant normalized decomposition
    staircase <expr> [--svg]    corners of a two-variable staircase
    line <n>                    irredundant decomposition of the n-step line staircase

Exit codes:
    0 = success or true, 1 = false, 2 = parse or input error, 3 = dimension error

Example:
    $ midr --dim 2 decompose "I[2,3/2;1,0]"
    cap(J[2,inf;1,0],J[inf,3/2;0,0])
"""
import argparse
import json
import logging
import sys
from typing import Callable, Dict, List, Optional, TextIO

from algebra.generators import finite_gen_to_afg, line_staircase
from cli.parser import parse_expr, parse_monomial
from cli.printer import print_canonical
from cli.staircase import staircase_2d
from core.config import Settings
from core.errors import DimensionMismatchError, ExprError, IdealError
from decomposition.containment import contains, equal
from decomposition.irreducibility import is_m_irreducible
from decomposition.redundancy import remove_redundant, simplify
from decomposition.transform import decompose, recompose

logger = logging.getLogger(__name__)

PROG = "midr"

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_INPUT_ERROR = 2
EXIT_DIMENSION_ERROR = 3

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


class Output:
    """Result sink honouring --json and --quiet."""

    def __init__(self, as_json: bool, quiet: bool, stream: TextIO):
        self.as_json = as_json
        self.quiet = quiet
        self.stream = stream

    def emit(self, text: str, data: object) -> None:
        if self.quiet:
            return
        if self.as_json:
            self.stream.write(json.dumps(data) + "\n")
        else:
            self.stream.write(text + "\n")


def _verdict(flag: bool) -> int:
    return EXIT_TRUE if flag else EXIT_FALSE


def cmd_decompose(args: argparse.Namespace, out: Output) -> int:
    decomposition = decompose(parse_expr(args.expr, args.dim).elaborate())
    out.emit(print_canonical(decomposition), decomposition.to_json_data())
    return EXIT_TRUE


def cmd_recompose(args: argparse.Namespace, out: Output) -> int:
    ideal = recompose(parse_expr(args.expr, args.dim).to_decomposition())
    out.emit(print_canonical(ideal), ideal.to_json_data())
    return EXIT_TRUE


def cmd_member(args: argparse.Namespace, out: Output) -> int:
    m = parse_monomial(args.monomial, args.dim)
    found = m in parse_expr(args.expr, args.dim).elaborate()
    out.emit(str(found).lower(), {"member": found})
    return _verdict(found)


def cmd_contains(args: argparse.Namespace, out: Output) -> int:
    larger = parse_expr(args.larger, args.dim).elaborate()
    smaller = parse_expr(args.smaller, args.dim).elaborate()
    result = contains(larger, smaller)
    text = "true" if result.holds else f"false {result.witness_text()}"
    out.emit(text, result.to_json_data())
    return _verdict(result.holds)


def cmd_equal(args: argparse.Namespace, out: Output) -> int:
    same = equal(parse_expr(args.left, args.dim).elaborate(), parse_expr(args.right, args.dim).elaborate())
    out.emit(str(same).lower(), {"equal": same})
    return _verdict(same)


def cmd_irreducible(args: argparse.Namespace, out: Output) -> int:
    result = is_m_irreducible(parse_expr(args.expr, args.dim).elaborate())
    data: Dict[str, object] = {
        "irreducible": result.irreducible,
        "decomposition": result.decomposition.to_json_data(),
    }
    text = "true"
    if result.witness is not None:
        left, right = result.witness
        data["witness"] = [left.to_json_data(), right.to_json_data()]
        text = f"false {print_canonical(left)} {print_canonical(right)}"
    out.emit(text, data)
    return _verdict(result.irreducible)


def cmd_simplify(args: argparse.Namespace, out: Output) -> int:
    decomposition = simplify(parse_expr(args.expr, args.dim).to_decomposition())
    out.emit(print_canonical(decomposition), decomposition.to_json_data())
    return EXIT_TRUE


def cmd_staircase(args: argparse.Namespace, out: Output) -> int:
    path = staircase_2d(parse_expr(args.expr, args.dim).elaborate())
    if args.svg and not out.quiet:
        out.stream.write(path.to_svg())
        return EXIT_TRUE
    out.emit("\n".join(str(corner) for corner in path.corners), path.to_json_data())
    return EXIT_TRUE


def cmd_line(args: argparse.Namespace, out: Output) -> int:
    if args.dim != 2:
        raise DimensionMismatchError(f"The line staircase lives in dimension 2, got --dim {args.dim}")
    decomposition = remove_redundant(decompose(finite_gen_to_afg(line_staircase(args.n))))
    text = f"{len(decomposition)} {print_canonical(decomposition)}"
    out.emit(text, {"components": len(decomposition), "decomposition": decomposition.to_json_data()})
    return EXIT_TRUE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=PROG, description="Monomial ideals with nonnegative rational exponents.")
    parser.add_argument("--dim", type=int, required=True, help="number of variables d")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--quiet", action="store_true", help="suppress result output")
    parser.add_argument("--log-level", choices=LOG_LEVELS, type=str.upper, help="overrides MIDR_LOG_LEVEL")
    commands = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable[[argparse.Namespace, Output], int], help_text: str, *operands: str):
        sub = commands.add_parser(name, help=help_text)
        for operand in operands:
            sub.add_argument(operand)
        sub.set_defaults(handler=handler)
        return sub

    add("decompose", cmd_decompose, "finite m-irreducible decomposition", "expr")
    add("recompose", cmd_recompose, "sum of boxes equal to an intersection", "expr")
    add("member", cmd_member, "membership of a monomial", "monomial", "expr")
    add("contains", cmd_contains, "does the first ideal contain the second", "larger", "smaller")
    add("equal", cmd_equal, "equality of two ideals", "left", "right")
    add("irreducible", cmd_irreducible, "m-irreducibility test", "expr")
    add("simplify", cmd_simplify, "irredundant decomposition", "expr")
    staircase = add("staircase", cmd_staircase, "two-variable staircase corners", "expr")
    staircase.add_argument("--svg", action="store_true", help="write an SVG image instead of corners")
    line = add("line", cmd_line, "decomposition of the n-step line staircase")
    line.add_argument("n", type=int)
    return parser


def main(argv: Optional[List[str]] = None, stdout: TextIO = sys.stdout, stderr: TextIO = sys.stderr) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = Settings.from_env()
    except IdealError as e:
        stderr.write(f"{PROG}: {e}\n")
        return EXIT_INPUT_ERROR
    logging.basicConfig(
        level=args.log_level or settings.log_level,
        format="%(levelname)s %(name)s: %(message)s",
        stream=stderr,
    )
    if args.dim < 1:
        stderr.write(f"{PROG}: --dim must be positive\n")
        return EXIT_DIMENSION_ERROR
    logger.info("running %s with d=%d", args.command, args.dim)
    try:
        return args.handler(args, Output(args.json, args.quiet, stdout))
    except ExprError as e:
        stderr.write(f"{PROG}: {e}\n{e.caret()}\n")
        return EXIT_DIMENSION_ERROR if isinstance(e, DimensionMismatchError) else EXIT_INPUT_ERROR
    except DimensionMismatchError as e:
        stderr.write(f"{PROG}: {e}\n")
        return EXIT_DIMENSION_ERROR
    except IdealError as e:
        stderr.write(f"{PROG}: {e}\n")
        return EXIT_INPUT_ERROR
    except RecursionError:
        stderr.write(f"{PROG}: expression nested too deeply\n")
        return EXIT_INPUT_ERROR
