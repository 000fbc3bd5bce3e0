"""Command-line entry point for lsakit."""

import argparse
import asyncio
import json
import os
import sys
from collections.abc import Sequence

from .commands import register_default_commands
from .config import reload_settings
from .contracts import CommandCall, CommandResult
from .errors import EXIT_INPUT_ERROR
from .tracing import get_tracer, reload_tracer


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the JSON report instead of text")
    common.add_argument("--numeric", action="store_true", help="floating-point field instead of Q(i)")
    common.add_argument("--eps", type=float, default=None, help="numeric zero tolerance")
    common.add_argument("--verbose", action="store_true", help="debug logging and transport trace")

    algebra = argparse.ArgumentParser(add_help=False)
    algebra.add_argument("source", help="algebra JSON file or catalog name")
    algebra.add_argument("--param", action="append", metavar="K=V", help="catalog parameter")

    seeded = argparse.ArgumentParser(add_help=False)
    seeded.add_argument("--seed", metavar="COEFFS", help='Cartan seed, e.g. "1,1,0"')

    parser = argparse.ArgumentParser(
        prog="lsakit", description="Complete left-symmetric algebras: checks, decompositions, graphs"
    )
    verbs = parser.add_subparsers(dest="command", required=True)

    verbs.add_parser("check", parents=[common, algebra], help="identities and completeness")
    verbs.add_parser("decompose", parents=[common, algebra, seeded], help="canonical decomposition")
    graph = verbs.add_parser("graph", parents=[common, algebra, seeded], help="root graph and properties")
    graph.add_argument("--kind", choices=["l", "r"], default="l")
    graph.add_argument("--dot", metavar="FILE", help="write the graph in DOT format")
    verbs.add_parser("simple", parents=[common, algebra], help="simplicity verdict")
    classify = verbs.add_parser("classify", parents=[common], help="classification by dimension")
    classify.add_argument("--dim", type=int, required=True)
    classify.add_argument("--out", metavar="DIR", help="write one DOT file per family")
    catalog = verbs.add_parser("catalog", parents=[common], help="list or emit catalog algebras")
    catalog.add_argument("name", nargs="?")
    catalog.add_argument("--param", action="append", metavar="K=V", help="catalog parameter")
    catalog.add_argument("--emit", metavar="FILE", help="write the algebra as JSON")
    return parser


def render(result: CommandResult, as_json: bool) -> tuple[str, str]:
    """(stdout, stderr) text for a result."""
    if as_json:
        report = result.report if result.report is not None else {"error": result.error}
        return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n", ""
    if result.error:
        return "", result.text + "\n"
    return result.text + "\n", ""


async def run(arguments: dict) -> CommandResult:
    registry = register_default_commands()
    call = CommandCall(command=arguments.pop("command"), arguments=arguments)
    return await registry.execute(call)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT_ERROR if e.code else 0

    if args.verbose:
        os.environ["TRACE_LEVEL"] = "debug"
        reload_settings()
        reload_tracer()

    arguments = vars(args)
    as_json = arguments.pop("json")
    result = asyncio.run(run(arguments))
    out, err = render(result, as_json)
    sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    get_tracer().debug(f"exit {result.exit_code}")
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
