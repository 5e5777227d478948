"""
Integer bitmask helpers.

A set of small nonnegative integers is stored as a Python int whose bit x is
set iff x is in the set. Semigroup tables, gap sets and cover universes all
use this representation.
"""

from typing import Iterable, List


def popcount(bits: int) -> int:
    """Count set bits."""
    return bin(bits).count('1')


def from_indices(indices: Iterable[int]) -> int:
    """Build a bitmask from bit positions."""
    bits = 0
    for i in indices:
        if i < 0:
            raise ValueError(f"bit index must be nonnegative, got {i}")
        bits |= 1 << i
    return bits


def to_indices(bits: int) -> List[int]:
    """Set bit positions in ascending order."""
    indices = []
    while bits:
        low = bits & -bits
        indices.append(low.bit_length() - 1)
        bits ^= low
    return indices


def lowest(bits: int) -> int:
    """Position of the lowest set bit, -1 for zero."""
    return (bits & -bits).bit_length() - 1


def highest(bits: int) -> int:
    """Position of the highest set bit, -1 for zero."""
    return bits.bit_length() - 1


def mask(width: int) -> int:
    """All bits 0..width-1 set."""
    return (1 << width) - 1 if width > 0 else 0


def close_under_shift(bits: int, step: int, width: int) -> int:
    """Add every multiple of `step` to every element, within width bits.

    Doubling the shift makes this logarithmic in width/step.
    """
    if step <= 0:
        return bits
    limit = mask(width)
    bits &= limit
    shift = step
    while shift < width:
        bits = (bits | (bits << shift)) & limit
        shift <<= 1
    return bits
