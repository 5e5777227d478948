"""Shared fixtures for the semidecomp test suite."""

import logging
import textwrap
from typing import Dict, FrozenSet, List

import pytest

from semigroups import families
from semigroups.core import Semigroup
from tests import oracles


@pytest.fixture
def s_3_10_11() -> Semigroup:
    return Semigroup.from_generators([3, 10, 11])


@pytest.fixture
def halfline6() -> Semigroup:
    return families.halfline(6)


@pytest.fixture(scope='session')
def gap_sets_12() -> List[FrozenSet[int]]:
    """All gap sets within {1..12}, i.e. the oversemigroup lattice of halfline(12)."""
    return oracles.all_gap_sets_within(12)


@pytest.fixture(scope='session')
def lattice_12(gap_sets_12) -> Dict[FrozenSet[int], Semigroup]:
    return {gaps: Semigroup.from_gaps(gaps) for gaps in gap_sets_12}


@pytest.fixture(scope='session')
def lattice_15() -> Dict[FrozenSet[int], Semigroup]:
    """Every numerical semigroup with F <= 15, keyed by gap set."""
    return {gaps: Semigroup.from_gaps(gaps) for gaps in oracles.all_gap_sets_within(15)}


@pytest.fixture(scope='session')
def lattice_14(lattice_15) -> Dict[FrozenSet[int], Semigroup]:
    """The oversemigroup lattice of halfline(14)."""
    return {gaps: s for gaps, s in lattice_15.items() if not gaps or max(gaps) <= 14}


@pytest.fixture
def claims_dir(tmp_path):
    """A claims directory with one cheap claim per file."""
    (tmp_path / '01_small.yml').write_text(textwrap.dedent("""
        claims:
          - id: prime-square-p3
            title: "p=3 exact = 2"
            kind: prime_square_exact
            params: {p: 3}
            expect: {size: 2}
          - id: two-generator-10
            title: "F(<a,b>) = ab-a-b, b <= 10"
            kind: two_generator_frobenius
            params: {max_b: 10}
            expect: {all_match: true}
    """))
    return tmp_path


@pytest.fixture(autouse=True)
def restore_root_logger():
    """main() reconfigures the root logger; put the previous handlers back."""
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)
