"""
Info Command for semidecomp

Prints every single-semigroup invariant: generators, gaps, Frobenius number,
multiplicity, genus, pseudo-Frobenius data and the irreducibility flags.
"""

import argparse
import logging
from typing import List, Tuple

import config
from commands.descriptors import add_descriptor_arguments, build_semigroup
from utils.report_builder import ReportDocument, create_report

# Set up logging
logger = logging.getLogger("semidecomp.commands.info")


def cmd_info(args: argparse.Namespace) -> Tuple[ReportDocument, int]:
    """Build the invariant report for the described semigroup.

    Args:
        args: Parsed arguments carrying a descriptor

    Returns:
        The report and exit status
    """
    semigroup, descriptor = build_semigroup(args)
    results = semigroup.to_dict()
    results['multiplicity'] = semigroup.multiplicity
    results['genus'] = semigroup.genus()
    if semigroup.is_full:
        # PF, BPF and special gaps are undefined on N
        results.update({'pf': None, 'bpf': None, 'special_gaps': None,
                        'symmetric': True, 'pseudo_symmetric': False, 'irreducible': True})
    else:
        results.update(semigroup.invariants().to_dict())
    logger.info(f"Computed invariants of {semigroup!r}")
    return create_report('info', descriptor, results), config.EXIT_OK


def setup(subparsers: argparse._SubParsersAction, parents: List[argparse.ArgumentParser]) -> None:
    """Register the info sub-command."""
    parser = subparsers.add_parser('info', parents=parents, help='invariants of one semigroup')
    add_descriptor_arguments(parser)
    parser.set_defaults(handler=cmd_info)
