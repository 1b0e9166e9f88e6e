"""The entry point of the `bernstein` command line.

Examples:
```sh
bernstein sonine --spec stable05.cfg --T 1 --M 1024 --out runs/sonine.csv
bernstein compare --spec stable05.cfg --x0 1 --paths 100000 --seed 1
```
"""
from __future__ import annotations

import logging
import sys
from typing import Sequence

from cerbernetix.bernstein.cli.commands import COMMANDS
from cerbernetix.bernstein.cli.context import RunContext
from cerbernetix.bernstein.cli.parser import build_parser, load_config
from cerbernetix.bernstein.errors import DomainError, NumericsError
from cerbernetix.bernstein.logging import get_log_level, handle_uncaught_exceptions, setup_logging

logger = logging.getLogger(__name__)

# The exit code of a completed run.
EXIT_OK = 0

# The exit code of invalid inputs.
EXIT_DOMAIN = 2

# The exit code of a numerical certification failure.
EXIT_NUMERICS = 3


def run(argv: Sequence[str] = None) -> int:
    """Runs a command of the command line.

    Args:
        argv (Sequence[str], optional): The arguments, those of the process if None.
        Defaults to None.

    Returns:
        int: The exit code, 0 on success, 2 on invalid inputs, 3 on numerical failures.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return int(error.code or 0)

    setup_logging(get_log_level(args.verbose - args.quiet), args.log)

    try:
        config = load_config(args)
        command, _ = COMMANDS[args.command]
        command(RunContext.create(args.command, config))

    except NumericsError as error:
        logger.error("Numerical failure: %s", error)
        return EXIT_NUMERICS

    except (DomainError, OSError) as error:
        logger.error("Invalid input: %s", error)
        return EXIT_DOMAIN

    return EXIT_OK


def main() -> None:  # pragma: no cover
    """Runs the command line of the process and exits with its code."""
    handle_uncaught_exceptions()
    sys.exit(run())
