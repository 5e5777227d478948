"""
Decompose Command for semidecomp

Modes:
- exact: minimum decomposition by set cover (exits 3 when the cap is hit)
- construct: at most |BPF| components, no enumeration
- bounds: the |BPF| upper bound, h(S) lower bound and xi-sets
"""

import argparse
import logging
from typing import List, Tuple

import config
from commands.descriptors import add_cap_argument, add_descriptor_arguments, build_semigroup
from semigroups.decomposition import Decomposition, decompose, verify_decomposition
from semigroups.errors import InternalVerificationFailed
from utils.report_builder import ReportDocument, create_report

# Set up logging
logger = logging.getLogger("semidecomp.commands.decompose")


def cmd_decompose(args: argparse.Namespace) -> Tuple[ReportDocument, int]:
    """Decompose the described semigroup in the requested mode.

    Args:
        args: Parsed arguments carrying a descriptor, mode and cap

    Returns:
        The report and exit status

    Raises:
        CapExceeded: In exact mode when the oversemigroup lattice exceeds the cap
    """
    semigroup, descriptor = build_semigroup(args)
    descriptor = dict(descriptor, mode=args.mode, cap=args.cap)
    result = decompose(semigroup, args.mode, args.cap)

    if isinstance(result, Decomposition):
        # Nothing is printed unless it verifies
        check = verify_decomposition(semigroup, result.components)
        if not check:
            raise InternalVerificationFailed(check.reason)
        results = result.to_dict()
        results['verified'] = True
    else:
        results = result.to_dict()
        results['bpf'] = semigroup.bpf()

    results['semigroup'] = semigroup.to_dict()
    logger.info(f"Decomposed {semigroup!r} in {args.mode} mode")
    return create_report('decompose', descriptor, results), config.EXIT_OK


def setup(subparsers: argparse._SubParsersAction, parents: List[argparse.ArgumentParser]) -> None:
    """Register the decompose sub-command."""
    parser = subparsers.add_parser('decompose', parents=parents, help='irreducible decomposition or bounds')
    add_descriptor_arguments(parser)
    parser.add_argument('--mode', choices=config.DECOMPOSE_MODES, default='exact')
    add_cap_argument(parser)
    parser.set_defaults(handler=cmd_decompose)
