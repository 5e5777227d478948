"""
Witness Command for semidecomp

Prints the half-line family witness for k: the factorial sequence and the
least n, as exact integers, and whether the half-line can be tabulated.
"""

import argparse
from typing import List, Tuple

import config
from commands.descriptors import positive_int
from semigroups import families
from utils.report_builder import ReportDocument, create_report


def cmd_witness(args: argparse.Namespace) -> Tuple[ReportDocument, int]:
    """Compute halfline_witness(k)."""
    witness = families.halfline_witness(args.k)
    results = witness.to_dict()
    results['table_capacity'] = config.TABLE_CAPACITY
    return create_report('witness', {'k': args.k}, results), config.EXIT_OK


def setup(subparsers: argparse._SubParsersAction, parents: List[argparse.ArgumentParser]) -> None:
    """Register the witness sub-command."""
    parser = subparsers.add_parser('witness', parents=parents, help='half-line family witness for k')
    parser.add_argument('--k', type=positive_int, required=True)
    parser.set_defaults(handler=cmd_witness)
