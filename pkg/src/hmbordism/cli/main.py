"""Command-line front end.

Exit codes: 0 success, 1 parse or type error, 2 evaluation error.
"""

from __future__ import annotations

import argparse
import sys

from .. import __version__
from ..exact import DEFAULT_MAX_DIM
from .evaluate import Evaluator, to_json, to_text
from .parser import ExpressionError, parse_expression, to_source


def run(text: str, fmt: str = "text", max_dim: int = DEFAULT_MAX_DIM) -> tuple[int, str]:
    """Evaluate one expression; returns ``(exit_code, output)``."""
    try:
        node = parse_expression(text)
    except ExpressionError as exc:
        return exc.exit_code, f"error: {exc}"
    try:
        value = Evaluator(max_dim)(node)
    except ExpressionError as exc:
        return exc.exit_code, f"error: {exc}"
    if fmt == "json":
        return 0, to_json(value, to_source(node))
    return 0, to_text(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hmbordism",
        description="Evaluate characteristic-class and homology-manifold bordism expressions.",
    )
    parser.add_argument("expression", nargs="?", help="expression; read from stdin if omitted")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM)
    parser.add_argument("--out", help="write output to this file instead of stdout")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    text = args.expression if args.expression is not None else sys.stdin.read()
    code, output = run(text.strip(), args.format, args.max_dim)
    if code:
        print(output, file=sys.stderr)
        return code
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(output + "\n")
    else:
        print(output)
    return 0
