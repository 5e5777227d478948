from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from utils import bitset
from utils.cover import CoverInstance, greedy_cover, solve_min_cover


def brute_force_cover(instance: CoverInstance):
    """Lexicographically least minimum cover by trying every r-subset in order."""
    if not instance.universe:
        return []
    for r in range(1, len(instance.candidates) + 1):
        for choice in combinations(range(len(instance.candidates)), r):
            if instance.is_cover(choice):
                return list(choice)
    return None


def test_empty_universe_needs_nothing() -> None:
    assert solve_min_cover(CoverInstance(universe=0, candidates=(0b1,))) == []


def test_single_candidate_cover() -> None:
    instance = CoverInstance(universe=0b111, candidates=(0b011, 0b111, 0b100))
    assert solve_min_cover(instance) == [1]


def test_greedy_is_not_always_minimal() -> None:
    # greedy takes the big middle set first and then needs two more
    instance = CoverInstance(universe=0b111111, candidates=(0b000111, 0b111000, 0b011110))
    assert len(greedy_cover(instance)) == 3
    assert solve_min_cover(instance) == [0, 1]


def test_lexicographic_tie_break_keeps_earliest_indices() -> None:
    instance = CoverInstance(universe=0b11, candidates=(0b01, 0b10, 0b11, 0b11))
    assert solve_min_cover(instance) == [2]
    instance = CoverInstance(universe=0b11, candidates=(0b01, 0b10, 0b01, 0b10))
    assert solve_min_cover(instance) == [0, 1]


def test_dominated_later_candidate_is_never_chosen() -> None:
    instance = CoverInstance(universe=0b111, candidates=(0b001, 0b110, 0b100, 0b011))
    assert solve_min_cover(instance) == [0, 1]


def test_incumbent_is_validated() -> None:
    instance = CoverInstance(universe=0b11, candidates=(0b01, 0b10))
    with pytest.raises(ValueError):
        solve_min_cover(instance, incumbent=[0])
    assert solve_min_cover(instance, incumbent=[1, 0]) == [0, 1]


def test_infeasible_instance() -> None:
    instance = CoverInstance(universe=0b111, candidates=(0b001, 0b010))
    with pytest.raises(ValueError):
        greedy_cover(instance)
    with pytest.raises(ValueError):
        solve_min_cover(instance)


@given(st.integers(min_value=1, max_value=7),
       st.lists(st.integers(min_value=0, max_value=127), min_size=1, max_size=9))
@settings(max_examples=200, deadline=None)
def test_solver_matches_brute_force(width, candidates) -> None:
    universe = bitset.mask(width)
    candidates = tuple(c & universe for c in candidates) + (universe,)
    instance = CoverInstance(universe=universe, candidates=candidates)
    assert solve_min_cover(instance) == brute_force_cover(instance)


def test_bitset_helpers() -> None:
    bits = bitset.from_indices([0, 3, 5])
    assert bits == 0b101001
    assert bitset.to_indices(bits) == [0, 3, 5]
    assert bitset.popcount(bits) == 3
    assert bitset.lowest(bits) == 0
    assert bitset.highest(bits) == 5
    assert bitset.lowest(0) == -1 and bitset.highest(0) == -1
    assert bitset.mask(0) == 0 and bitset.mask(4) == 0b1111
    assert bitset.to_indices(bitset.close_under_shift(1, 3, 10)) == [0, 3, 6, 9]
    with pytest.raises(ValueError):
        bitset.from_indices([-1])
