"""
Core numerical semigroup representation.

A Semigroup is stored by its dense membership table on 0..F+1, packed into a
Python int (bit x set iff x is an element). The table is the canonical form:
equality, hashing and ordering all use it. Minimal generators are recomputed
from the table on first use and cached.

Conventions for N itself: F(N) = -1, no gaps, generators [1], symmetric and
irreducible. PF, BPF and special gaps raise FullSemigroup on N.
"""

import math
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, Iterable, List, Optional, Tuple

import config
from semigroups.errors import (
    CapacityExceeded,
    EmptyInput,
    FullSemigroup,
    GcdNotOne,
    InvalidGenerator,
    NotASemigroup,
)
from utils import bitset

# Set up logging
logger = logging.getLogger("semidecomp.core")


@dataclass(frozen=True)
class InvariantBundle:
    """Pseudo-Frobenius data and irreducibility flags of one semigroup."""

    pf: Tuple[int, ...]
    bpf: Tuple[int, ...]
    special_gaps: Tuple[int, ...]
    symmetric: bool
    pseudo_symmetric: bool
    irreducible: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            'pf': list(self.pf),
            'bpf': list(self.bpf),
            'special_gaps': list(self.special_gaps),
            'symmetric': self.symmetric,
            'pseudo_symmetric': self.pseudo_symmetric,
            'irreducible': self.irreducible,
        }


def frobenius_two_generators(a: int, b: int) -> int:
    """Closed form F(<a, b>) = ab - a - b for coprime a, b.

    Args:
        a: First generator
        b: Second generator

    Returns:
        The Frobenius number of <a, b>
    """
    g = math.gcd(a, b)
    if g != 1:
        raise GcdNotOne(g)
    return a * b - a - b


def _frobenius_bound(gens: List[int]) -> int:
    """An upper bound on F(<gens>) for gcd(gens) = 1."""
    if gens[0] == 1:
        return -1
    best = None
    for a, b in combinations(gens, 2):
        if math.gcd(a, b) == 1:
            value = a * b - a - b
            if best is None or value < best:
                best = value
    if best is not None:
        return best
    # No coprime pair: Schur's bound (a_1 - 1)(a_n - 1) - 1
    return (gens[0] - 1) * (gens[-1] - 1) - 1


def _check_capacity(required: int) -> None:
    if required > config.TABLE_CAPACITY:
        raise CapacityExceeded(required, config.TABLE_CAPACITY)


class Semigroup:
    """A numerical semigroup in canonical table form.

    Instances are immutable; every operation returns a new Semigroup.
    """

    __slots__ = ('_bits', '_frobenius', '_generators')

    def __init__(self, bits: int):
        """Wrap a canonical table.

        Args:
            bits: Membership bits over 0..F+1 with bit F+1 as the top bit.
                Use the from_* constructors rather than calling this directly.
        """
        self._bits = bits
        self._frobenius = bits.bit_length() - 2
        self._generators: Optional[Tuple[int, ...]] = None

    # Constructors

    @classmethod
    def _from_window(cls, members: int, width: int) -> 'Semigroup':
        """Normalise membership bits over 0..width-1 (everything above assumed in S)."""
        gaps = ~members & bitset.mask(width)
        frobenius = bitset.highest(gaps)
        return cls((members & bitset.mask(frobenius + 1)) | (1 << (frobenius + 1)))

    @classmethod
    def full(cls) -> 'Semigroup':
        """The semigroup N of all nonnegative integers."""
        return cls(1)

    @classmethod
    def from_generators(cls, gens: Iterable[int]) -> 'Semigroup':
        """Build <gens> by dynamic closure up to a proven Frobenius bound.

        Args:
            gens: Positive integers with gcd 1; redundant entries are allowed

        Returns:
            The canonical Semigroup

        Raises:
            EmptyInput, InvalidGenerator, GcdNotOne, CapacityExceeded
        """
        values = list(gens)
        if not values:
            raise EmptyInput()
        for value in values:
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise InvalidGenerator(value)
        values = sorted(set(values))
        g = math.gcd(*values)
        if g != 1:
            raise GcdNotOne(g)
        if values[0] == 1:
            return cls.full()

        multiplicity = values[0]
        bound = _frobenius_bound(values)
        width = min(bound, config.TABLE_CAPACITY) + multiplicity + 1

        members = 1
        for value in values:
            members = bitset.close_under_shift(members, value, width)

        gaps = ~members & bitset.mask(width)
        frobenius = bitset.highest(gaps)
        # F is exact only if the m elements after it were inside the window
        if frobenius + multiplicity >= width:
            raise CapacityExceeded(bound + 2, config.TABLE_CAPACITY)
        _check_capacity(frobenius + 2)

        semigroup = cls._from_window(members, width)
        logger.debug(f"Built semigroup from generators {values}: F={frobenius}")
        return semigroup

    @classmethod
    def from_gaps(cls, gaps: Iterable[int]) -> 'Semigroup':
        """Build the semigroup whose gap set is exactly `gaps`.

        Args:
            gaps: Positive integers

        Returns:
            The canonical Semigroup

        Raises:
            NotASemigroup: If the complement is not closed under addition
                (x and y name a witness pair with x + y a gap)
        """
        values = sorted(set(gaps))
        for value in values:
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise NotASemigroup(value, 0, f"gaps must be positive integers, got {value!r}")
        if not values:
            return cls.full()

        frobenius = values[-1]
        _check_capacity(frobenius + 2)
        gap_bits = bitset.from_indices(values)
        members = ~gap_bits & bitset.mask(frobenius + 1)

        for s in bitset.to_indices(members & ~1):
            overlap = (members << s) & gap_bits
            if overlap:
                total = bitset.lowest(overlap)
                raise NotASemigroup(s, total - s)

        return cls(members | (1 << (frobenius + 1)))

    # Canonical form

    @property
    def bits(self) -> int:
        """Membership bits over 0..F+1."""
        return self._bits

    @property
    def frobenius(self) -> int:
        """Largest gap, -1 for N."""
        return self._frobenius

    @property
    def gap_table(self) -> Tuple[bool, ...]:
        """Dense membership table over 0..F+1 (True = element)."""
        return tuple(bool((self._bits >> x) & 1) for x in range(self._frobenius + 2))

    @property
    def sort_key(self) -> Tuple[int, Tuple[bool, ...]]:
        """Deterministic ordering key: (Frobenius number, table)."""
        return (self._frobenius, self.gap_table)

    def window(self, width: int) -> int:
        """Membership bits over 0..width-1."""
        if width <= self._frobenius + 2:
            return self._bits & bitset.mask(width)
        return self._bits | (bitset.mask(width) & ~bitset.mask(self._frobenius + 1))

    @property
    def generators(self) -> Tuple[int, ...]:
        """Minimal generating set, ascending."""
        if self._generators is None:
            self._generators = self._minimal_generators()
        return self._generators

    def _minimal_generators(self) -> Tuple[int, ...]:
        if self.is_full:
            return (1,)
        # Every minimal generator is at most F + m
        width = self._frobenius + self.multiplicity + 1
        target = self.window(width)
        closure = 1
        found = []
        for x in bitset.to_indices(target & ~1):
            if closure == target:
                break
            if not (closure >> x) & 1:
                found.append(x)
                closure = bitset.close_under_shift(closure, x, width)
        return tuple(found)

    @property
    def multiplicity(self) -> int:
        """Least nonzero element."""
        if self.is_full:
            return 1
        return bitset.lowest(self._bits & ~1)

    @property
    def is_full(self) -> bool:
        return self._frobenius == -1

    # Membership and gaps

    def contains(self, x: int) -> bool:
        """Check whether x is an element."""
        if x < 0:
            return False
        if x > self._frobenius:
            return True
        return bool((self._bits >> x) & 1)

    __contains__ = contains

    @property
    def gap_bits(self) -> int:
        return ~self._bits & bitset.mask(self._frobenius + 1)

    def gaps(self) -> List[int]:
        """All gaps, ascending."""
        return bitset.to_indices(self.gap_bits)

    def genus(self) -> int:
        """Number of gaps."""
        return bitset.popcount(self.gap_bits)

    # Pseudo-Frobenius data

    def _pf_bits(self) -> int:
        if self.is_full:
            raise FullSemigroup("pseudo_frobenius")
        gens = self.generators
        extended = self.window(self._frobenius + gens[-1] + 1)
        result = self.gap_bits
        # x + s in S for all nonzero s reduces to x + g in S for minimal generators g
        for g in gens:
            result &= extended >> g
        return result

    def pseudo_frobenius(self) -> List[int]:
        """Gaps x with x + s in S for every nonzero element s."""
        return bitset.to_indices(self._pf_bits())

    def bpf(self) -> List[int]:
        """Pseudo-Frobenius numbers strictly above F/2."""
        if self.is_full:
            raise FullSemigroup("bpf")
        return [a for a in self.pseudo_frobenius() if 2 * a > self._frobenius]

    def special_gaps(self) -> List[int]:
        """Pseudo-Frobenius numbers x with 2x in S.

        These are exactly the gaps whose adjunction gives a semigroup.
        """
        if self.is_full:
            raise FullSemigroup("special_gaps")
        return [x for x in self.pseudo_frobenius() if self.contains(2 * x)]

    # Irreducibility

    def is_symmetric(self) -> bool:
        """F odd and F - x in S for every gap x. True for N (F = -1, no gaps)."""
        frobenius = self._frobenius
        if frobenius % 2 == 0:
            return False
        return all(self.contains(frobenius - x) for x in self.gaps())

    def is_pseudo_symmetric(self) -> bool:
        """F even and F - x in S for every gap x other than F/2."""
        frobenius = self._frobenius
        if frobenius < 0 or frobenius % 2 == 1:
            return False
        half = frobenius // 2
        return all(self.contains(frobenius - x) for x in self.gaps() if x != half)

    def is_irreducible(self) -> bool:
        return self.is_symmetric() or self.is_pseudo_symmetric()

    def invariants(self) -> InvariantBundle:
        """All pseudo-Frobenius data and flags at once.

        Raises:
            FullSemigroup: For N
        """
        pf = self.pseudo_frobenius()
        frobenius = self._frobenius
        symmetric = self.is_symmetric()
        pseudo_symmetric = self.is_pseudo_symmetric()
        return InvariantBundle(
            pf=tuple(pf),
            bpf=tuple(a for a in pf if 2 * a > frobenius),
            special_gaps=tuple(x for x in pf if self.contains(2 * x)),
            symmetric=symmetric,
            pseudo_symmetric=pseudo_symmetric,
            irreducible=symmetric or pseudo_symmetric,
        )

    # Constructions

    def adjoin(self, t: int) -> 'Semigroup':
        """The semigroup <S, t>."""
        if isinstance(t, bool) or not isinstance(t, int) or t < 0:
            raise InvalidGenerator(t)
        if self.contains(t):
            return self
        if t == 1:
            return Semigroup.full()
        width = self._frobenius + 2
        return Semigroup._from_window(bitset.close_under_shift(self._bits, t, width), width)

    def add_gap(self, h: int) -> 'Semigroup':
        """S with the single gap h made an element (caller ensures h is special)."""
        width = self._frobenius + 2
        return Semigroup._from_window(self._bits | (1 << h), width)

    def intersect(self, other: 'Semigroup') -> 'Semigroup':
        """Intersection; its gap set is the union of both gap sets."""
        width = max(self._frobenius, other._frobenius) + 2
        return Semigroup._from_window(self.window(width) & other.window(width), width)

    def includes(self, other: 'Semigroup') -> bool:
        """Check whether other is a subset of self (gaps(self) within gaps(other))."""
        return self.gap_bits & ~other.gap_bits == 0

    # Serialization

    def to_dict(self) -> Dict[str, Any]:
        return {
            'generators': list(self.generators),
            'frobenius': self._frobenius,
            'gaps': self.gaps(),
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Semigroup):
            return NotImplemented
        return self._bits == other._bits

    def __hash__(self) -> int:
        return hash(self._bits)

    def __repr__(self) -> str:
        return f"Semigroup<{', '.join(map(str, self.generators))}>"


def intersect_all(semigroups: Iterable[Semigroup]) -> Semigroup:
    """Intersection of a collection; N for an empty one."""
    result = Semigroup.full()
    for semigroup in semigroups:
        result = result.intersect(semigroup)
    return result
