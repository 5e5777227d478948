#!/usr/bin/env python3
"""
semidecomp - Main Entry Point

Command-line front end for exact computation on numerical semigroups:
invariants, irreducible decompositions, decomposition bounds, family
witnesses and the reproduction table.

Sub-commands live in the commands package; each module exposes
setup(subparsers, parents) and is loaded by name.
"""

import sys
import time
import logging
import argparse
import importlib
from typing import List, Optional

import config
from commands.descriptors import output_parent
from semigroups.errors import CapExceeded, InternalVerificationFailed, SemigroupError
from utils.report_builder import render

logger = logging.getLogger(config.LOGGER_NAME)

# List of command modules to load
initial_commands = [
    'commands.info',
    'commands.decompose',
    'commands.witness',
    'commands.repro',
]


def setup_logging(args: argparse.Namespace) -> None:
    """Configure logging to stderr (and LOG_FILE when set) at the requested level."""
    if args.debug:
        level = logging.DEBUG
    elif args.verbose:
        level = logging.INFO
    elif args.quiet:
        level = logging.ERROR
    else:
        level = getattr(logging, config.LOG_LEVEL.upper(), logging.WARNING)

    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if config.LOG_FILE:
        handlers.append(logging.FileHandler(config.LOG_FILE))
    logging.basicConfig(level=level, format=config.LOG_FORMAT, handlers=handlers, force=True)


def build_parser() -> argparse.ArgumentParser:
    """Create the argument parser and load every command module into it."""
    parser = argparse.ArgumentParser(
        prog='semidecomp',
        description='Exact computation on numerical semigroups and their irreducible decompositions.',
    )
    subparsers = parser.add_subparsers(dest='command', required=True)
    parents = [output_parent()]
    for name in initial_commands:
        module = importlib.import_module(name)
        module.setup(subparsers, parents)
        logger.debug(f"Loaded command: {name}")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one command and print its report.

    Returns:
        The process exit status
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args)

    started = time.perf_counter_ns()
    try:
        report, status = args.handler(args)
    except CapExceeded as e:
        logger.error(f"{e}")
        print(f"error: {e} (try --mode bounds or a larger --cap)", file=sys.stderr)
        return config.EXIT_CAP_EXCEEDED
    except InternalVerificationFailed as e:
        logger.error(f"Command {args.command} produced an invalid result: {e}")
        print(f"error: {e}", file=sys.stderr)
        return config.EXIT_REPRO_FAILURE
    except SemigroupError as e:
        logger.error(f"Invalid input for {args.command}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return config.EXIT_INVALID_INPUT

    if args.timing:
        report.elapsed_ms = (time.perf_counter_ns() - started) // 1_000_000
    if not args.quiet:
        sys.stdout.write(render(report, args.output_format))
    return status


if __name__ == "__main__":
    raise SystemExit(main())
