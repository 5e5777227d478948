from itertools import combinations

import pytest

from semigroups import families
from semigroups.core import Semigroup, intersect_all
from semigroups.decomposition import (
    BoundsReport,
    CONSTRUCTIVE,
    Decomposition,
    EXACT_COVER,
    bounds,
    constructive_decomposition,
    decompose,
    hitting_set_bruteforce,
    minimal_decomposition,
    verify_decomposition,
    xi,
)
from semigroups.errors import CapExceeded, FullSemigroup, NotBpfElement
from tests import oracles


def test_xi_examples(halfline6) -> None:
    assert xi(halfline6, 6).members == (6,)
    assert xi(halfline6, 4).members == (4,)
    assert xi(families.halfline(28), 24).members == (24,)


def test_xi_needs_bpf_element(halfline6) -> None:
    with pytest.raises(NotBpfElement) as excinfo:
        xi(halfline6, 2)
    assert excinfo.value.a == 2
    with pytest.raises(NotBpfElement):
        xi(Semigroup.full(), 1)


def test_xi_sets_contain_their_element(s_3_10_11) -> None:
    for a in s_3_10_11.bpf():
        members = xi(s_3_10_11, a).members
        assert members[0] == a
        assert list(members) == sorted(members)
        assert all(a <= v <= s_3_10_11.frobenius for v in members)


def test_bounds_examples(halfline6, s_3_10_11) -> None:
    report = bounds(halfline6)
    assert (report.m, report.h) == (3, 3)
    assert [x.members for x in report.xi_sets] == [(4,), (5,), (6,)]
    assert report.witness_values == (4, 5, 6)

    report = bounds(s_3_10_11)
    assert (report.m, report.h) == (2, 2)
    assert hitting_set_bruteforce(report) == 2


def test_bounds_halfline_witness_k3() -> None:
    report = bounds(families.halfline(28))
    assert report.m == 14
    assert report.h >= 3
    members = {x.a: x.members for x in report.xi_sets}
    for a in (1, 2, 4):
        assert members[28 - a] == (28 - a,)


def test_bounds_on_irreducible_and_full() -> None:
    report = bounds(Semigroup.from_generators([3, 5]))
    assert (report.m, report.h) == (1, 1)
    assert report.witness_values == (7,)
    with pytest.raises(FullSemigroup):
        bounds(Semigroup.full())


def test_bounds_serialization(s_3_10_11) -> None:
    data = bounds(s_3_10_11).to_dict()
    assert data['m'] == 2 and data['h'] == 2
    assert [entry['a'] for entry in data['xi_sets']] == [7, 8]


def test_constructive_decomposition_examples(s_3_10_11) -> None:
    result = constructive_decomposition(s_3_10_11)
    assert set(result.components) == {Semigroup.from_generators([3, 7, 11]), Semigroup.from_generators([3, 5])}
    assert result.method == CONSTRUCTIVE
    assert not result.exact_minimum

    symmetric = Semigroup.from_generators([2, 5])
    result = constructive_decomposition(symmetric)
    assert result.components == (symmetric,)
    assert not result.exact_minimum

    with pytest.raises(FullSemigroup):
        constructive_decomposition(Semigroup.full())


def test_minimal_decomposition_examples(s_3_10_11, halfline6) -> None:
    assert len(minimal_decomposition(Semigroup.from_generators([2, 5]))) == 1
    result = minimal_decomposition(s_3_10_11)
    assert len(result) == 2
    assert result.exact_minimum and result.method == EXACT_COVER
    assert len(minimal_decomposition(halfline6)) == 3
    with pytest.raises(FullSemigroup):
        minimal_decomposition(Semigroup.full())


def test_minimal_decomposition_is_deterministic(halfline6) -> None:
    first = minimal_decomposition(halfline6)
    second = minimal_decomposition(families.halfline(6))
    assert first.components == second.components
    assert first.to_dict() == second.to_dict()


def test_minimal_decomposition_cap(halfline6) -> None:
    with pytest.raises(CapExceeded):
        minimal_decomposition(halfline6, cap=2)


@pytest.mark.slow
def test_minimal_decomposition_prime_square_p5() -> None:
    result = minimal_decomposition(families.prime_square_semigroup(5))
    assert len(result) == 4
    assert verify_decomposition(families.prime_square_semigroup(5), result.components)


def test_verify_decomposition_examples(s_3_10_11) -> None:
    good = [Semigroup.from_generators([3, 7, 11]), Semigroup.from_generators([3, 5])]
    assert verify_decomposition(s_3_10_11, good)

    result = verify_decomposition(s_3_10_11, good[:1])
    assert not result
    assert result.witness == 7

    assert not verify_decomposition(s_3_10_11, [Semigroup.full()])
    assert not verify_decomposition(s_3_10_11, [])


def test_verify_decomposition_reasons(s_3_10_11) -> None:
    # <4, 5, 6, 7> has 3 as a gap, but 3 is an element of S
    result = verify_decomposition(s_3_10_11, [Semigroup.from_generators([4, 5, 6, 7])])
    assert not result.ok and result.witness == 3
    assert 'does not contain' in result.reason

    result = verify_decomposition(s_3_10_11, [s_3_10_11])
    assert not result.ok
    assert 'not irreducible' in result.reason


def test_decompose_dispatch(s_3_10_11) -> None:
    assert isinstance(decompose(s_3_10_11, 'exact'), Decomposition)
    assert decompose(s_3_10_11, 'construct').method == CONSTRUCTIVE
    assert isinstance(decompose(s_3_10_11, 'bounds'), BoundsReport)
    with pytest.raises(ValueError):
        decompose(s_3_10_11, 'fastest')


@pytest.mark.slow
def test_sandwich_over_halfline_lattice(lattice_14) -> None:
    for s in lattice_14.values():
        if s.is_full:
            continue
        report = bounds(s)
        assert report.m == len(s.bpf())
        exact = minimal_decomposition(s)
        constructive = constructive_decomposition(s)
        assert report.h <= len(exact) <= len(constructive) <= report.m
        assert verify_decomposition(s, exact.components)
        assert verify_decomposition(s, constructive.components)
        if s.frobenius > 12:
            continue
        brute = hitting_set_bruteforce(report)
        if brute is not None:
            assert brute == report.h
            assert brute == oracles.min_distinct_over_product([x.members for x in report.xi_sets])


@pytest.mark.slow
def test_minimum_matches_subset_search(gap_sets_12, lattice_12) -> None:
    irreducible = [g for g in gap_sets_12 if g and oracles.is_irreducible(g)]
    for gaps, s in lattice_12.items():
        if not gaps or max(gaps) > 10:
            continue
        pool = [g for g in irreducible if g <= gaps]
        assert len(minimal_decomposition(s)) == oracles.minimum_decomposition_size(gaps, pool)


@pytest.mark.slow
def test_special_gap_cover_matches_intersection(gap_sets_12, lattice_12) -> None:
    irreducible = [g for g in gap_sets_12 if g and oracles.is_irreducible(g)]
    for gaps, s in lattice_12.items():
        if not gaps or max(gaps) > 9:
            continue
        special = s.special_gaps()
        pool = [lattice_12[g] for g in irreducible if g <= gaps]
        for r in range(1, 4):
            for components in combinations(pool, r):
                covered = all(any(not c.contains(x) for c in components) for x in special)
                assert (intersect_all(components) == s) == covered


@pytest.mark.slow
@pytest.mark.parametrize('k', [4, 6, 9])
def test_skn_needs_at_least_d_minus_one_components(k) -> None:
    d = families.smallest_prime_factor(k)
    for n in range(k * k - 1, 91):
        if (n - 1) % k == 0:
            continue
        semigroup = families.skn(k, n)
        try:
            size = len(minimal_decomposition(semigroup, cap=20000))
        except CapExceeded:
            size = max(bounds(semigroup).h, families.gap_lemma_bound(k, n))
        assert size >= d - 1, (k, n, size)
