# src/main.py
"""gt command-line entry point"""

import argparse
import json
import sys
from contextlib import ExitStack
from typing import List, Optional

from src.cli.commands import cmd_check, cmd_compute, cmd_crosscheck
from src.core.config import Config
from src.core.constants import (
    EXIT_CONSISTENCY, EXIT_PARSE, Model, Operation, OutputFormat, Suite
)
from src.core.exceptions import (
    ConfigurationError, ConsistencyError, GenericityError, GoldmanTuraevError, InputError
)
from src.utils.logger import ComputationLogger, get_logger, setup_logging


def _common_options() -> argparse.ArgumentParser:
    """Options accepted both before and after the subcommand"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-p", "--punctures", type=int, default=argparse.SUPPRESS,
                        help="number of punctures p")
    common.add_argument("-N", "--degree", type=int, default=argparse.SUPPRESS,
                        help="truncation degree")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--trials", type=int, default=argparse.SUPPRESS)
    common.add_argument("--max-len", dest="max_len", type=int, default=argparse.SUPPRESS)
    common.add_argument("--format", dest="output_format", default=argparse.SUPPRESS,
                        choices=[f.value for f in OutputFormat])
    common.add_argument("--output", default=argparse.SUPPRESS, help="write the result to FILE")
    common.add_argument("--env", default=argparse.SUPPRESS, help="configuration profile")
    common.add_argument("--log-level", dest="log_level", default=argparse.SUPPRESS)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="gt", parents=[common],
        description="Goldman bracket and Turaev cobracket on the punctured disc",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for operation in Operation:
        compute = sub.add_parser(operation.value, parents=[common],
                                 help=f"compute the {operation.value}")
        compute.add_argument("model", choices=[m.value for m in Model])
        compute.add_argument("inputs", nargs="+", help="words or loop combinations, '-' for stdin")

    crosscheck = sub.add_parser("crosscheck", parents=[common],
                                help="compare the geometric and skein models over a corpus")
    crosscheck.add_argument("operation", choices=[o.value for o in Operation])

    check = sub.add_parser("check", parents=[common], help="run a property suite")
    check.add_argument("suite", choices=[s.value for s in Suite])
    return parser


def _dispatch(args: argparse.Namespace, config: Config, out) -> int:
    run = config.with_overrides(
        punctures=getattr(args, 'punctures', None),
        degree=getattr(args, 'degree', None),
        seed=getattr(args, 'seed', None),
        trials=getattr(args, 'trials', None),
        max_len=getattr(args, 'max_len', None),
        output_format=getattr(args, 'output_format', None),
    )
    if args.command == "crosscheck":
        return cmd_crosscheck(Operation(args.operation), run, config, out)
    if args.command == "check":
        return cmd_check(Suite(args.suite), run, config, out)
    return cmd_compute(Operation(args.command), Model(args.model), args.inputs, run,
                       getattr(args, 'punctures', None), out)


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    args = build_parser().parse_args(argv)

    try:
        config = Config(env=getattr(args, 'env', None))
    except (ConfigurationError, ValueError, TypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE

    setup_logging(
        log_level=getattr(args, 'log_level', None) or config.logging.level,
        log_file=config.logging.file,
        log_format=config.logging.format if sys.stderr.isatty() else "json",
    )
    logger = get_logger(__name__)

    try:
        with ExitStack() as stack:
            output = getattr(args, 'output', None)
            out = stack.enter_context(open(output, "w", encoding="utf-8")) if output else sys.stdout
            return _dispatch(args, config, out)
    except GenericityError as e:
        ComputationLogger(__name__).log_genericity(e.feature, e.detail)
        print(json.dumps(e.to_dict(), default=str, sort_keys=True), file=sys.stderr)
        return EXIT_CONSISTENCY
    except ConsistencyError as e:
        logger.error(f"ConsistencyError: {e}")
        print(json.dumps(e.to_dict(), default=str, sort_keys=True), file=sys.stderr)
        return EXIT_CONSISTENCY
    except (InputError, ConfigurationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except GoldmanTuraevError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONSISTENCY


if __name__ == "__main__":
    sys.exit(main())
