"""
Command-line module for skein4

This module provides the ``skein4`` command: link evaluation, the named check
suites, Burau matrices, 3-colorings, catalog management and the HTTP server.

Exit codes: 0 success, 1 usage, syntax, arity or catalog errors, 2 inputs
outside the supported class or past a budget, 3 failed suites.
"""

import argparse
import logging
import sys
from typing import List, Optional

from skein4.app import config
from skein4.app.errors import BudgetExceededError, Skein4Error, UnsupportedClassError
from skein4.app.schemas.records import SuiteReport

# Configure logging
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNSUPPORTED = 2
EXIT_SUITE_FAILED = 3
EXIT_INTERNAL = 4


class ArgumentParser(argparse.ArgumentParser):
    """Parser whose usage errors exit with EXIT_USAGE"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def exit_code(error: Exception) -> int:
    if isinstance(error, (UnsupportedClassError, BudgetExceededError)):
        return EXIT_UNSUPPORTED
    return EXIT_USAGE


def _print_report(report: SuiteReport, as_json: bool) -> int:
    if as_json:
        print(report.model_dump_json())
    else:
        for item in report.items:
            print(item.to_line())
    return EXIT_OK if report.passed else EXIT_SUITE_FAILED


def cmd_eval(args: argparse.Namespace) -> int:
    from skein4.app.services.evaluation import evaluate_text

    record = evaluate_text(args.expr, args.spec, args.invariant)
    if not args.timing:
        record = record.model_copy(update={"timing_ms": None})
    if args.json:
        print(record.model_dump_json())
    elif args.record:
        print(record.to_line())
    else:
        print(record.normalized_value if args.normalize else record.value)
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    from skein4.app.services.checks import run_suite

    report = run_suite(args.which, spec=args.spec, trials=args.trials, seed=args.seed)
    return _print_report(report, args.json)


def cmd_burau(args: argparse.Namespace) -> int:
    from skein4.app.services.burau import delta_checks
    from skein4.app.services.evaluation import burau_text

    if args.battery:
        return _print_report(delta_checks(args.trials, args.seed), args.json)
    if not args.braid:
        raise Skein4Error("burau needs --braid or --battery")
    record = burau_text(args.braid, args.mod, args.int_mod)
    print(record.model_dump_json() if args.json else record.to_text())
    return EXIT_OK


def cmd_tricolor(args: argparse.Namespace) -> int:
    from skein4.app.services.evaluation import tricolor_text
    from skein4.app.services.tangles import parse_tangle
    from skein4.app.services.tricolor import threemove_invariance_check

    if args.invariance:
        expr = parse_tangle(args.expr) if args.expr else None
        report = threemove_invariance_check(expr, trials=args.trials, seed=args.seed)
        return _print_report(report, args.json)
    if not args.expr:
        raise Skein4Error("tricolor needs --expr or --invariance")
    record = tricolor_text(args.expr)
    print(record.model_dump_json() if args.json else record.to_line())
    return EXIT_OK


def cmd_catalog(args: argparse.Namespace) -> int:
    from skein4.app.services import catalog

    if args.action == "list":
        for entry in catalog.list_entries():
            print(entry.to_line())
    elif args.action == "show":
        print(catalog.show(args.name))
    else:
        entry = catalog.add(args.name, args.expression, args.note)
        print(entry.to_line())
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    from skein4.main import serve

    serve(port=args.port, reload=args.reload)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    from skein4.app.services.checks import SUITES
    from skein4.app.services.coeff import spec_names

    parser = ArgumentParser(prog="skein4", description="Fourth skein module evaluation and identity checks")
    parser.add_argument("--log-level", default=config.LOG_LEVEL, help="logging level (default from SKEIN4_LOG_LEVEL)")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    p = commands.add_parser("eval", help="evaluate a link expression")
    p.add_argument("--expr", required=True, help="link expression; @name refers to the catalog")
    p.add_argument("--spec", default="spec-i", choices=spec_names(), help="coefficient spec")
    p.add_argument("--invariant", choices=("p1", "p2"), help="evaluate P1 or P2 instead of the raw spec value")
    p.add_argument("--normalize", action="store_true", help="print the framing-normalized value")
    p.add_argument("--record", action="store_true", help="print the single-line key=value record")
    p.add_argument("--json", action="store_true", help="print the record as JSON")
    p.add_argument("--timing", action="store_true", help="include timing_ms in the record")
    p.set_defaults(handler=cmd_eval)

    p = commands.add_parser("check", help="run a named check suite")
    p.add_argument("which", choices=list(SUITES))
    p.add_argument("--spec", help="coefficient spec for the conditions and rotation suites")
    p.add_argument("--trials", type=int, help="number of random trials")
    p.add_argument("--seed", type=int, help="seed of the random trials")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_check)

    p = commands.add_parser("burau", help="Burau matrix of a braid or the identity battery")
    p.add_argument("--braid", help='braid word such as "braid3[1 -2 1]"')
    p.add_argument("--mod", help='polynomial modulus in t such as "t^2-t+1"')
    p.add_argument("--int-mod", type=int, help="integer modulus")
    p.add_argument("--battery", action="store_true", help="run the full identity battery")
    p.add_argument("--trials", type=int, default=100, help="random t3 insertions of the battery")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_burau)

    p = commands.add_parser("tricolor", help="Fox 3-colorings of a tangle or link")
    p.add_argument("--expr", help="tangle or link expression")
    p.add_argument("--invariance", action="store_true", help="check invariance under random 3-moves")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_tricolor)

    p = commands.add_parser("catalog", help="list, show or add named expressions")
    actions = p.add_subparsers(dest="action", required=True, parser_class=ArgumentParser)
    actions.add_parser("list")
    show = actions.add_parser("show")
    show.add_argument("name")
    add = actions.add_parser("add")
    add.add_argument("name")
    add.add_argument("expression")
    add.add_argument("--note", default="")
    p.set_defaults(handler=cmd_catalog)

    p = commands.add_parser("serve", help="run the HTTP API")
    p.add_argument("--port", type=int, default=config.API_PORT)
    p.add_argument("--reload", action="store_true")
    p.set_defaults(handler=cmd_serve)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=args.log_level.upper(),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )

    try:
        return args.handler(args)
    except Skein4Error as e:
        code = exit_code(e)
        logger.debug(f"{args.command} failed with exit code {code}: {e!r}")
        print(f"error: {e}", file=sys.stderr)
        return code
    except Exception as e:
        logger.exception(f"Unexpected error in {args.command}: {e!r}")
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
