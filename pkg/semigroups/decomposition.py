"""
Irreducible decompositions.

- bounds: m = |BPF(S)| components always suffice; h(S), the least number of
  distinct values hitting every xi-set, is needed by every decomposition.
- constructive_decomposition: one maximal irreducible oversemigroup avoiding
  each BPF element, at most m components.
- minimal_decomposition: exact minimum by set cover. The universe is the set
  of special gaps of S; an irreducible oversemigroup covers the special gaps
  it misses. A family of oversemigroups intersects to S iff every special gap
  is missed by one of them.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import config
from semigroups.core import Semigroup, intersect_all
from semigroups.errors import FullSemigroup, InternalVerificationFailed, NotBpfElement
from semigroups.oversemigroups import enumerate_irreducible_oversemigroups, maximal_irreducible_avoiding
from utils import bitset
from utils.cover import CoverInstance, greedy_cover, solve_min_cover

# Set up logging
logger = logging.getLogger("semidecomp.decomposition")

CONSTRUCTIVE = 'constructive'
EXACT_COVER = 'exact-cover'


@dataclass(frozen=True)
class XiSet:
    """xi(a) = {a + t : a + t not in <S, t>} for a BPF element a."""

    a: int
    members: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {'a': self.a, 'members': list(self.members)}


@dataclass(frozen=True)
class BoundsReport:
    """m = |BPF| upper bound and h lower bound, with the xi-sets behind h."""

    m: int
    h: int
    xi_sets: Tuple[XiSet, ...]
    witness_values: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'm': self.m,
            'h': self.h,
            'xi_sets': [xi_set.to_dict() for xi_set in self.xi_sets],
            'witness_values': list(self.witness_values),
        }


@dataclass(frozen=True)
class Decomposition:
    """Irreducible components whose intersection is the base semigroup."""

    components: Tuple[Semigroup, ...]
    exact_minimum: bool
    method: str

    def __len__(self) -> int:
        return len(self.components)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'size': len(self.components),
            'exact_minimum': self.exact_minimum,
            'method': self.method,
            'components': [component.to_dict() for component in self.components],
        }


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of verify_decomposition; truthy iff the decomposition is valid."""

    ok: bool
    reason: str = ''
    witness: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok


def _xi_members(semigroup: Semigroup, a: int, adjoined: Dict[int, Semigroup]) -> Tuple[int, ...]:
    members = [a]
    # a + t must be a gap of <S, t>, which contains S, so t <= F - a
    for t in range(1, semigroup.frobenius - a + 1):
        if t not in adjoined:
            adjoined[t] = semigroup.adjoin(t)
        if not adjoined[t].contains(a + t):
            members.append(a + t)
    return tuple(members)


def xi(semigroup: Semigroup, a: int) -> XiSet:
    """Compute xi(a) by testing t = 0 .. F - a.

    Raises:
        NotBpfElement: If a is not in BPF(S)
    """
    if semigroup.is_full or a not in semigroup.bpf():
        raise NotBpfElement(a)
    return XiSet(a=a, members=_xi_members(semigroup, a, {}))


def bounds(semigroup: Semigroup) -> BoundsReport:
    """The upper bound m = |BPF(S)| and the exact lower bound h(S).

    h(S) is solved as a minimum hitting set: BPF indices form the universe
    and choosing a value v covers every i with v in xi(a_i).

    Raises:
        FullSemigroup: For N
    """
    if semigroup.is_full:
        raise FullSemigroup("bounds")
    frobenius = semigroup.frobenius
    if semigroup.is_irreducible():
        return BoundsReport(m=1, h=1, xi_sets=(XiSet(frobenius, (frobenius,)),),
                            witness_values=(frobenius,))

    adjoined: Dict[int, Semigroup] = {}
    xi_sets = tuple(XiSet(a=a, members=_xi_members(semigroup, a, adjoined)) for a in semigroup.bpf())

    values = sorted({v for xi_set in xi_sets for v in xi_set.members})
    candidates = []
    for v in values:
        candidates.append(bitset.from_indices(i for i, xi_set in enumerate(xi_sets) if v in xi_set.members))
    instance = CoverInstance(universe=bitset.mask(len(xi_sets)), candidates=tuple(candidates))
    chosen = solve_min_cover(instance, greedy_cover(instance))

    report = BoundsReport(m=len(xi_sets), h=len(chosen), xi_sets=xi_sets,
                          witness_values=tuple(values[j] for j in chosen))
    logger.info(f"Bounds for {semigroup!r}: h={report.h}, m={report.m}")
    return report


def hitting_set_bruteforce(report: BoundsReport) -> Optional[int]:
    """min #{b_1, ..., b_m} over the product of the xi-sets.

    Returns:
        The minimum, or None when the product exceeds config.XI_PRODUCT_LIMIT
    """
    size = 1
    for xi_set in report.xi_sets:
        size *= len(xi_set.members)
    if size > config.XI_PRODUCT_LIMIT:
        return None
    return min(len(set(choice)) for choice in product(*(xi_set.members for xi_set in report.xi_sets)))


def verify_decomposition(semigroup: Semigroup, components: Sequence[Semigroup]) -> VerificationResult:
    """Check that every component is irreducible, contains S, and that they intersect to S."""
    if not components:
        return VerificationResult(False, "no components")
    for component in components:
        if not component.includes(semigroup):
            witness = bitset.lowest(component.gap_bits & ~semigroup.gap_bits)
            return VerificationResult(False, f"{component!r} does not contain S", witness)
        if not component.is_irreducible():
            frobenius = component.frobenius
            witness = next(x for x in component.gaps()
                           if 2 * x != frobenius and not component.contains(frobenius - x))
            return VerificationResult(False, f"{component!r} is not irreducible", witness)
    intersection = intersect_all(components)
    if intersection != semigroup:
        witness = bitset.lowest(semigroup.gap_bits & ~intersection.gap_bits)
        return VerificationResult(False, f"intersection is not S ({witness} missing from gap union)", witness)
    return VerificationResult(True)


def _checked(semigroup: Semigroup, decomposition: Decomposition) -> Decomposition:
    result = verify_decomposition(semigroup, decomposition.components)
    if not result:
        raise InternalVerificationFailed(result.reason)
    return decomposition


def constructive_decomposition(semigroup: Semigroup) -> Decomposition:
    """At most |BPF(S)| components: one maximal irreducible oversemigroup avoiding each BPF element.

    Raises:
        FullSemigroup, InternalVerificationFailed
    """
    if semigroup.is_full:
        raise FullSemigroup("constructive_decomposition")
    if semigroup.is_irreducible():
        return Decomposition(components=(semigroup,), exact_minimum=False, method=CONSTRUCTIVE)
    components: List[Semigroup] = []
    for a in semigroup.bpf():
        component = maximal_irreducible_avoiding(semigroup, a)
        if component not in components:
            components.append(component)
    decomposition = Decomposition(components=tuple(components), exact_minimum=False, method=CONSTRUCTIVE)
    return _checked(semigroup, decomposition)


def minimal_decomposition(semigroup: Semigroup, cap: Optional[int] = None) -> Decomposition:
    """Exact minimum decomposition by set cover over special gaps.

    Args:
        semigroup: The semigroup to decompose
        cap: Oversemigroup enumeration cap

    Raises:
        FullSemigroup, CapExceeded, InternalVerificationFailed
    """
    if semigroup.is_full:
        raise FullSemigroup("minimal_decomposition")
    if semigroup.is_irreducible():
        return Decomposition(components=(semigroup,), exact_minimum=True, method=EXACT_COVER)

    special = semigroup.special_gaps()
    pool = enumerate_irreducible_oversemigroups(semigroup, cap)

    def coverage(candidate: Semigroup) -> int:
        return bitset.from_indices(i for i, x in enumerate(special) if not candidate.contains(x))

    scored = [(coverage(candidate), candidate) for candidate in pool]
    scored.sort(key=lambda item: (-bitset.popcount(item[0]), -item[1].frobenius, item[1].gap_table))
    ordered = [candidate for _, candidate in scored]
    instance = CoverInstance(universe=bitset.mask(len(special)), candidates=tuple(mask for mask, _ in scored))

    incumbent = [ordered.index(component) for component in constructive_decomposition(semigroup).components]
    chosen = solve_min_cover(instance, incumbent)

    decomposition = Decomposition(components=tuple(ordered[j] for j in chosen),
                                  exact_minimum=True, method=EXACT_COVER)
    logger.info(f"Minimal decomposition of {semigroup!r}: {len(decomposition)} components "
                f"from a pool of {len(pool)}")
    return _checked(semigroup, decomposition)


def decompose(semigroup: Semigroup, mode: str, cap: Optional[int] = None) -> Union[Decomposition, BoundsReport]:
    """Dispatch on mode: 'exact', 'construct' or 'bounds'."""
    if mode == 'exact':
        return minimal_decomposition(semigroup, cap)
    if mode == 'construct':
        return constructive_decomposition(semigroup)
    if mode == 'bounds':
        return bounds(semigroup)
    raise ValueError(f"unknown mode: {mode}")
