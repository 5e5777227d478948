"""
Oversemigroup enumeration.

For T strictly containing S, max(T \\ S) is a special gap of S, so closing S
under unitary extensions (S u {h}, h a special gap) breadth-first reaches
every oversemigroup. The extension graph is a lattice, so members are
deduplicated on their canonical table.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import config
from semigroups import families
from semigroups.core import Semigroup
from semigroups.errors import CapExceeded, NotAGap

# Set up logging
logger = logging.getLogger("semidecomp.oversemigroups")


@dataclass(frozen=True)
class OversemigroupSet:
    """Deduplicated oversemigroups of a base semigroup, sorted by (F, table)."""

    base: Semigroup
    members: Tuple[Semigroup, ...]
    truncated: bool
    cap: int

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, semigroup: Semigroup) -> bool:
        return semigroup in self.members


def unitary_extensions(semigroup: Semigroup) -> List[Semigroup]:
    """S u {h} for every special gap h of S, in ascending order of h."""
    if semigroup.is_full:
        return []
    return [semigroup.add_gap(h) for h in semigroup.special_gaps()]


def enumerate_oversemigroups(semigroup: Semigroup, cap: Optional[int] = None,
                             strict: bool = True) -> OversemigroupSet:
    """All numerical semigroups containing `semigroup`.

    Args:
        semigroup: The base semigroup
        cap: Maximum number of members (defaults to config.DEFAULT_CAP)
        strict: Raise CapExceeded at the cap instead of returning a truncated set

    Returns:
        An OversemigroupSet whose members include the base and, unless
        truncated, N

    Raises:
        CapExceeded: If strict and the cap is reached
    """
    if cap is None:
        cap = config.DEFAULT_CAP
    if cap < 1:
        raise ValueError(f"cap must be at least 1, got {cap}")

    seen = {semigroup.bits}
    members = [semigroup]
    frontier = [semigroup]
    truncated = False
    level = 0

    while frontier and not truncated:
        next_frontier = []
        for current in frontier:
            for child in unitary_extensions(current):
                if child.bits in seen:
                    continue
                if len(members) >= cap:
                    truncated = True
                    break
                seen.add(child.bits)
                members.append(child)
                next_frontier.append(child)
            if truncated:
                break
        level += 1
        logger.debug(f"Level {level}: frontier {len(next_frontier)}, total {len(members)}")
        next_frontier.sort(key=lambda s: s.sort_key)
        frontier = next_frontier

    if truncated:
        logger.warning(f"Oversemigroup enumeration of {semigroup!r} stopped at cap {cap}")
        if strict:
            raise CapExceeded(len(members), cap)

    members.sort(key=lambda s: s.sort_key)
    logger.info(f"Enumerated {len(members)} oversemigroups of {semigroup!r}")
    return OversemigroupSet(base=semigroup, members=tuple(members), truncated=truncated, cap=cap)


def enumerate_irreducible_oversemigroups(semigroup: Semigroup, cap: Optional[int] = None,
                                         strict: bool = True) -> OversemigroupSet:
    """The irreducible members of enumerate_oversemigroups, N excluded."""
    everything = enumerate_oversemigroups(semigroup, cap, strict=strict)
    irreducible = tuple(s for s in everything.members if not s.is_full and s.is_irreducible())
    return OversemigroupSet(base=semigroup, members=irreducible,
                            truncated=everything.truncated, cap=everything.cap)


def maximal_irreducible_avoiding(semigroup: Semigroup, x: int) -> Semigroup:
    """An irreducible oversemigroup with Frobenius number x.

    Adds the largest special gap other than x until x is the only special
    gap left.

    Raises:
        NotAGap: If x is negative or an element of the semigroup
    """
    if x < 0 or semigroup.contains(x):
        raise NotAGap(x)
    current = semigroup
    while True:
        special = current.special_gaps()
        if special == [x]:
            return current
        candidate = max(h for h in special if h != x)
        current = current.add_gap(candidate)


@dataclass
class GapLemmaReport:
    """Result of checking the gap lemma on the irreducible oversemigroups of S_{k,n}."""

    k: int
    n: int
    d: int
    pool_size: int = 0
    checked: Dict[int, int] = field(default_factory=dict)  # i -> oversemigroups with n - i a gap
    counterexample: Optional[Tuple[int, Semigroup]] = None

    @property
    def holds(self) -> bool:
        return self.counterexample is None


def check_gap_lemma(k: int, n: int, cap: Optional[int] = None) -> GapLemmaReport:
    """Check that every irreducible I containing S_{k,n} with n - i a gap has F(I) = n - i.

    Args:
        k: Family parameter
        n: Family parameter
        cap: Enumeration cap

    Returns:
        A GapLemmaReport with counts per i and the first counterexample found

    Raises:
        CapExceeded: If the oversemigroup lattice is larger than cap
    """
    base = families.skn(k, n)
    d = families.smallest_prime_factor(k)
    pool = enumerate_irreducible_oversemigroups(base, cap)
    report = GapLemmaReport(k=k, n=n, d=d, pool_size=len(pool))

    for i in range(1, d):
        report.checked[i] = 0
        for candidate in pool:
            if candidate.contains(n - i):
                continue
            report.checked[i] += 1
            if candidate.frobenius != n - i and report.counterexample is None:
                report.counterexample = (i, candidate)
                logger.error(f"Gap lemma fails for S_{{{k},{n}}}, i={i}: {candidate!r}")

    logger.info(f"Gap lemma on S_{{{k},{n}}}: pool {report.pool_size}, checked {report.checked}, "
                f"holds={report.holds}")
    return report
