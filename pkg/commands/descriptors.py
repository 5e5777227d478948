"""
Shared argument handling for the sub-commands.

A semigroup is given on the command line by exactly one descriptor:
--gens a,b,c | --gaps g1,g2 | --halfline n | --skn k,n
"""

import argparse
from typing import Any, Dict, List, Tuple

import config
from semigroups import families
from semigroups.core import Semigroup


def int_list(text: str) -> List[int]:
    """Parse a comma-separated list of integers; the empty string is the empty list."""
    text = text.strip()
    if not text:
        return []
    try:
        return [int(part) for part in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def int_pair(text: str) -> Tuple[int, int]:
    values = int_list(text)
    if len(values) != 2:
        raise argparse.ArgumentTypeError(f"expected two integers k,n, got {text!r}")
    return values[0], values[1]


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def output_parent() -> argparse.ArgumentParser:
    """Flags shared by every sub-command: output format, verbosity."""
    parent = argparse.ArgumentParser(add_help=False)
    formats = parent.add_mutually_exclusive_group()
    formats.add_argument('--json', dest='output_format', action='store_const', const='json',
                         help='structured JSON document')
    formats.add_argument('--csv', dest='output_format', action='store_const', const='csv',
                         help='comma-separated rows')
    parent.set_defaults(output_format='table')
    parent.add_argument('--timing', action='store_true', help='include elapsed time in the report')
    levels = parent.add_mutually_exclusive_group()
    levels.add_argument('--quiet', action='store_true', help='no report output, errors only')
    levels.add_argument('--verbose', action='store_true', help='info-level logging')
    levels.add_argument('--debug', action='store_true', help='debug-level logging')
    return parent


def add_descriptor_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument('--gens', type=int_list, help='minimal or redundant generators, e.g. 3,10,11')
    group.add_argument('--gaps', type=int_list, help='the gap set, e.g. 1,2,4,5,7,8 ("" for N)')
    group.add_argument('--halfline', type=positive_int, metavar='N', help='{0} u {N+1, N+2, ...}')
    group.add_argument('--skn', type=int_pair, metavar='K,N', help='<K, N, N+1, ..., N+K-1>')


def add_cap_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--cap', type=positive_int, default=config.DEFAULT_CAP,
                        help=f'oversemigroup enumeration cap (default {config.DEFAULT_CAP})')


def build_semigroup(args: argparse.Namespace) -> Tuple[Semigroup, Dict[str, Any]]:
    """Construct the semigroup named by the descriptor flags.

    Returns:
        The semigroup and a descriptor dictionary echoed in the report

    Raises:
        SemigroupError subclasses for invalid input
    """
    if args.gens is not None:
        return Semigroup.from_generators(args.gens), {'gens': args.gens}
    if args.gaps is not None:
        return Semigroup.from_gaps(args.gaps), {'gaps': args.gaps}
    if args.halfline is not None:
        return families.halfline(args.halfline), {'halfline': args.halfline}
    k, n = args.skn
    return families.skn(k, n), {'skn': [k, n]}
