"""
forge-words - Command-line entry point.

Exit codes:
    0  success
    2  usage or configuration error
    3  mathematical failure (no fit, mismatch, failed extension)

Usage:
    forge-words count --list 2,2,2 --verify
    forge-words series --r 2 --terms 6
    forge-words guess-rec --r 1 --terms 40 --compare-fixture
    forge-words selftest --quick
"""
from __future__ import annotations

import argparse
import os
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import NoReturn

from forge_words import __version__
from forge_words.cli.commands import (
    cmd_asymptotics,
    cmd_avoiders,
    cmd_count,
    cmd_guess_alg,
    cmd_guess_rec,
    cmd_series,
)
from forge_words.cli.output import CommandResult, render
from forge_words.cli.selftest import run_selftest
from forge_words.domain import ConfigurationError, ForgeWordsError
from forge_words.domain.entities import Command, MultiplicityList, OutputFormat, RunConfig
from forge_words.infrastructure.logging import LOG_LEVEL_ENV_VAR, LogService, configure_logging

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FAILURE = 3

DEFAULT_CLI_LOG_LEVEL = "WARNING"

_logger = LogService(__name__)

COMMANDS: dict[Command, Callable[[RunConfig], CommandResult]] = {
    Command.COUNT: cmd_count,
    Command.AVOIDERS: cmd_avoiders,
    Command.SERIES: cmd_series,
    Command.GUESS_ALG: cmd_guess_alg,
    Command.GUESS_REC: cmd_guess_rec,
    Command.ASYMPTOTICS: cmd_asymptotics,
    Command.SELFTEST: lambda config: run_selftest(quick=config.quick),
}


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    """Raises instead of exiting, so main() owns the exit code."""

    def error(self, message: str) -> NoReturn:
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        dest="output_format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.JSON.value,
    )
    common.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    common.add_argument("--cache", type=Path, help="JSON-lines avoider count cache")

    series_args = _ArgumentParser(add_help=False)
    series_args.add_argument("--r", type=int, default=1, help="copies of each letter")
    series_args.add_argument("--terms", type=int, help="number of coefficients")
    series_args.add_argument("--compare-fixture", action="store_true")

    parser = _ArgumentParser(
        prog="forge-words",
        description="Exact enumeration of words containing the pattern 123 exactly once.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    count = sub.add_parser("count", parents=[common], help="exactly-one-123 count of a list")
    count.add_argument("--list", dest="multiplicities", required=True, help="e.g. 2,2,2")
    count.add_argument("--verify", action="store_true", help="cross-check by brute force")

    avoiders = sub.add_parser("avoiders", parents=[common], help="123-avoiding words of a list")
    avoiders.add_argument("--list", dest="multiplicities", required=True)

    sub.add_parser("series", parents=[common, series_args], help="coefficients of f_r")

    guess_alg = sub.add_parser(
        "guess-alg", parents=[common, series_args], help="guess the algebraic equation of f_r"
    )
    guess_alg.add_argument("--degx", dest="deg_x", type=int, default=6)
    guess_alg.add_argument("--degy", dest="deg_y", type=int, default=4)
    guess_alg.add_argument("--guard", type=int)

    guess_rec = sub.add_parser(
        "guess-rec", parents=[common, series_args], help="guess the recurrence of a_r"
    )
    guess_rec.add_argument("--max-order", type=int)
    guess_rec.add_argument("--max-degree", type=int)
    guess_rec.add_argument("--guard", type=int)

    asymptotics = sub.add_parser(
        "asymptotics", parents=[common], help="estimate the growth of a_r"
    )
    asymptotics.add_argument("--r", type=int, default=1)
    asymptotics.add_argument("--nmax", dest="n_max", type=int, default=300)
    asymptotics.add_argument("--terms", type=int, help="series terms the recurrence is guessed on")
    asymptotics.add_argument("--max-order", type=int)
    asymptotics.add_argument("--max-degree", type=int)
    asymptotics.add_argument("--guard", type=int)

    selftest = sub.add_parser("selftest", parents=[common], help="run the acceptance ladder")
    selftest.add_argument("--quick", action="store_true", help="fast rungs only")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """
    Raises:
        InvalidMultiplicityListError: If --list does not parse
        InvalidRunConfigError: If the flags are inconsistent
    """
    raw_list = getattr(args, "multiplicities", None)
    return RunConfig(
        command=Command(args.command),
        r=getattr(args, "r", 1),
        terms=getattr(args, "terms", None),
        multiplicities=MultiplicityList.parse(raw_list) if raw_list is not None else None,
        deg_x=getattr(args, "deg_x", 6),
        deg_y=getattr(args, "deg_y", 4),
        max_order=getattr(args, "max_order", None),
        max_degree=getattr(args, "max_degree", None),
        guard=getattr(args, "guard", None),
        n_max=getattr(args, "n_max", 300),
        verify=getattr(args, "verify", False),
        compare_fixture=getattr(args, "compare_fixture", False),
        cache_path=args.cache,
        output_format=OutputFormat(args.output_format),
        quick=getattr(args, "quick", False),
    )


def main(argv: Sequence[str] | None = None) -> int:
    """Parse, run one command, print its result; returns the exit code."""
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as e:
        print(f"forge-words: error: {e}", file=sys.stderr)
        return EXIT_USAGE

    configure_logging(
        log_level=args.log_level or os.environ.get(LOG_LEVEL_ENV_VAR, DEFAULT_CLI_LOG_LEVEL)
    )

    with LogService.correlation_context():
        try:
            config = config_from_args(args)
            result = COMMANDS[config.command](config)
        except ConfigurationError as e:
            _logger.error("Invalid configuration", code=e.code, error=e.message)
            print(f"forge-words: error: {e.message}", file=sys.stderr)
            return EXIT_USAGE
        except ForgeWordsError as e:
            _logger.error("Command failed", code=e.code, error=e.message)
            print(f"forge-words: {e.code}: {e.message}", file=sys.stderr)
            return EXIT_FAILURE

        sys.stdout.write(render(result, config.output_format))
        _logger.info("Command finished", command=config.command.value, ok=result.ok)
        return EXIT_OK if result.ok else EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
