"""
Exact minimum set cover.

Elements and coverage sets are integer bitmasks. Candidates are branched on
in the order given, so among all minimum covers the solver returns the
lexicographically least list of candidate indices. Both the minimum
decomposition search and the h(S) hitting-set problem are posed as a
CoverInstance.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from utils import bitset

# Set up logging
logger = logging.getLogger("semidecomp.cover")


@dataclass(frozen=True)
class CoverInstance:
    """Universe bitmask plus one coverage bitmask per candidate."""

    universe: int
    candidates: Tuple[int, ...]

    def is_cover(self, indices: Sequence[int]) -> bool:
        covered = 0
        for i in indices:
            covered |= self.candidates[i]
        return covered & self.universe == self.universe


def greedy_cover(instance: CoverInstance) -> List[int]:
    """Pick the candidate covering most uncovered elements, lowest index on ties.

    Raises:
        ValueError: If the candidates cannot cover the universe
    """
    uncovered = instance.universe
    chosen = []
    while uncovered:
        best_index, best_gain = -1, 0
        for index, coverage in enumerate(instance.candidates):
            gain = bitset.popcount(coverage & uncovered)
            if gain > best_gain:
                best_index, best_gain = index, gain
        if best_index < 0:
            raise ValueError("candidates do not cover the universe")
        chosen.append(best_index)
        uncovered &= ~instance.candidates[best_index]
    return sorted(chosen)


def _reduce(instance: CoverInstance) -> List[int]:
    """Indices of candidates not dominated by an earlier candidate.

    A candidate whose coverage is contained in that of an earlier one can be
    swapped for it in any cover, which makes the index list lexicographically
    smaller, so it never appears in the answer.
    """
    first_by_mask: Dict[int, int] = {}
    for index, coverage in enumerate(instance.candidates):
        masked = coverage & instance.universe
        if masked and masked not in first_by_mask:
            first_by_mask[masked] = index
    kept = []
    for mask, index in first_by_mask.items():
        if any(other != mask and mask & other == mask and first < index
               for other, first in first_by_mask.items()):
            continue
        kept.append(index)
    return sorted(kept)


def solve_min_cover(instance: CoverInstance, incumbent: Optional[Sequence[int]] = None) -> List[int]:
    """Branch and bound for a minimum cover.

    Args:
        instance: The cover problem
        incumbent: A known cover used as the initial bound (greedy if omitted)

    Returns:
        Sorted candidate indices of the lexicographically least minimum cover

    Raises:
        ValueError: If the candidates cannot cover the universe
    """
    universe = instance.universe
    if not universe:
        return []
    if incumbent is None:
        incumbent = greedy_cover(instance)
    elif not instance.is_cover(incumbent):
        raise ValueError("incumbent is not a cover")

    order = _reduce(instance)
    coverage = [instance.candidates[i] & universe for i in order]
    count = len(order)
    suffix_union = [0] * (count + 1)
    for j in range(count - 1, -1, -1):
        suffix_union[j] = suffix_union[j + 1] | coverage[j]

    # Accept covers of the incumbent's size too, so the lexicographic tie-break holds
    best_size = len(incumbent) + 1
    best: List[int] = sorted(incumbent)
    chosen: List[int] = []

    def lower_bound(uncovered: int, start: int) -> int:
        largest = max(bitset.popcount(c & uncovered) for c in coverage[start:])
        return -(-bitset.popcount(uncovered) // largest)

    def search(start: int, uncovered: int) -> None:
        nonlocal best_size, best
        if not uncovered:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best = [order[j] for j in chosen]
                logger.debug(f"Cover incumbent improved to {best_size}")
            return
        if len(chosen) + 1 >= best_size:
            return
        if suffix_union[start] & uncovered != uncovered:
            return
        if len(chosen) + lower_bound(uncovered, start) >= best_size:
            return
        for j in range(start, count):
            if suffix_union[j] & uncovered != uncovered:
                break
            if not coverage[j] & uncovered:
                continue
            chosen.append(j)
            search(j + 1, uncovered & ~coverage[j])
            chosen.pop()

    search(0, universe)
    return sorted(best)
