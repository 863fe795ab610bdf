"""
Tests for gotzmann_engine: Gotzmann detection, persistence, splitting
indices and subset enumeration
"""
from itertools import combinations

import pytest

from gotzprop.macaulay.binomial_core import binom
from gotzprop.macaulay.gotzmann_engine import (
    BudgetExceededError, NotGotzmannError, bound_chain, check_cell,
    doubled_growth_holds, enumerate_gotzmann, enumerate_subsets,
    find_splitting_index, growth, is_gotzmann, iter_subset_rows,
    macaulay_bound, persistence_chains, shadow_chain, splitting_conditions,
    subset_count, unrank_combination, verify_persistence,
)
from gotzprop.macaulay.monomial_algebra import (
    MonomialSet, all_monomials, empty_set, lexsegment, shadow,
)


def S(n, d, *members):
    return MonomialSet(n, d, [tuple(m) for m in members])


LEX_3_2_5 = lexsegment(3, 2, 5)
SQUARES_2 = S(2, 2, (2, 0), (0, 2))
SQUARES_3 = S(3, 2, (2, 0, 0), (0, 2, 0))


def test_growth_and_bound():
    assert growth(0, -1) == 0
    assert growth(0, 3) == 0
    assert growth(3, 1) == 4
    assert macaulay_bound(LEX_3_2_5) == 9
    assert macaulay_bound(empty_set(3, 2)) == 0


@pytest.mark.parametrize("V,expected", [
    (LEX_3_2_5, True),
    (all_monomials(3, 2), True),
    (empty_set(3, 2), True),
    (S(3, 2, (0, 1, 1)), True),
    (SQUARES_2, False),
    (SQUARES_3, False),
])
def test_is_gotzmann(V, expected):
    assert is_gotzmann(V) is expected


def test_lexsegments_are_gotzmann():
    for n in range(1, 5):
        for d in range(0, 4):
            for a in range(0, len(all_monomials(n, d)) + 1):
                assert is_gotzmann(lexsegment(n, d, a)), (n, d, a)


def test_chains():
    assert shadow_chain(LEX_3_2_5, 4) == [5, 9, 14, 20, 27]
    assert bound_chain(5, 3, 4) == [5, 9, 14, 20, 27]
    assert shadow_chain(SQUARES_2, 0) == [2]


def test_verify_persistence_lex():
    assert verify_persistence(LEX_3_2_5, 4)
    assert verify_persistence(LEX_3_2_5)
    sizes, bounds, ok = persistence_chains(LEX_3_2_5, 4)
    assert sizes == bounds == [5, 9, 14, 20, 27]
    assert ok


def test_verify_persistence_gotzmann_non_lex():
    """x3 * (x1, x2, x3) is Gotzmann without being a lexsegment"""
    V = S(3, 2, (1, 0, 1), (0, 1, 1), (0, 0, 2))
    assert V != lexsegment(3, 2, 3)
    assert verify_persistence(V, 6)


def test_verify_persistence_rejects():
    with pytest.raises(NotGotzmannError):
        verify_persistence(SQUARES_2)
    with pytest.raises(NotGotzmannError):
        persistence_chains(SQUARES_3, 2)
    with pytest.raises(ValueError):
        verify_persistence(LEX_3_2_5, 0)


def test_find_splitting_index_lex():
    i, result = find_splitting_index(LEX_3_2_5)
    assert i == 1
    assert result.kept == S(3, 2, (2, 0, 0), (1, 1, 0), (1, 0, 1))
    assert result.dropped == S(3, 2, (0, 2, 0), (0, 1, 1))


def test_splitting_conditions_lex():
    first = splitting_conditions(LEX_3_2_5, 1)
    assert first['qualifies']
    assert all(first[k] for k in ('kept_gotzmann', 'dropped_gotzmann', 'strict_bound',
                                  'containment', 'doubled_growth'))

    # D_3 = {x1^2, x1x2, x2^2} has b = 3 = ddown(5, 2)
    third = splitting_conditions(LEX_3_2_5, 3)
    assert len(third['split'].dropped) == 3
    assert not third['strict_bound']
    assert not third['qualifies']


@pytest.mark.parametrize("V,error", [
    (S(3, 2, (1, 1, 0)), ValueError),
    (S(3, 2, (2, 0, 0), (1, 1, 0)), ValueError),
    (all_monomials(3, 2), ValueError),
    (SQUARES_3, NotGotzmannError),
])
def test_find_splitting_index_rejects(V, error):
    with pytest.raises(error):
        find_splitting_index(V)


def test_doubled_growth_identity():
    # up(up(3,2),2) + up(up(2,1),1) = 10 + 4 = up(up(5,2),2) = 14
    assert doubled_growth_holds(5, 2, 3, 3)
    assert not doubled_growth_holds(5, 1, 4, 3)


def test_subset_count_and_check_cell():
    assert subset_count(3, 2, 3) == 20
    assert check_cell(3, 2, 3) == (6, 20)
    with pytest.raises(ValueError):
        check_cell(3, 2, 7)
    with pytest.raises(BudgetExceededError):
        check_cell(3, 2, 3, budget=19)


def test_unrank_combination_order():
    """Ranks walk the combinations of range(5) in lexicographic order"""
    expected = list(combinations(range(5), 2))
    assert [tuple(unrank_combination(r, 5, 2)) for r in range(10)] == expected
    assert unrank_combination(0, 4, 0) == []


def test_iter_subset_rows():
    assert list(iter_subset_rows(5, 3)) == list(combinations(range(5), 3))
    assert list(iter_subset_rows(5, 3, 4, 7)) == list(combinations(range(5), 3))[4:7]
    assert list(iter_subset_rows(4, 0)) == [()]
    assert list(iter_subset_rows(4, 4)) == [(0, 1, 2, 3)]
    with pytest.raises(ValueError):
        list(iter_subset_rows(5, 3, 8, 2))


@pytest.mark.parametrize("n,d,a,count", [
    (2, 2, 2, 3),
    (3, 1, 3, 1),
    (2, 3, 2, 6),
    (3, 2, 0, 1),
    (3, 2, 4, 15),
])
def test_enumerate_subsets_counts(n, d, a, count):
    subsets = list(enumerate_subsets(n, d, a))
    assert len(subsets) == count == binom(len(all_monomials(n, d)), a)
    assert len(set(subsets)) == count
    assert all(len(V) == a and (V.n_vars, V.degree) == (n, d) for V in subsets)


def test_enumerate_subsets_rank_ranges_concatenate():
    full = list(enumerate_subsets(3, 2, 3))
    parts = (list(enumerate_subsets(3, 2, 3, start=0, stop=7))
             + list(enumerate_subsets(3, 2, 3, start=7, stop=13))
             + list(enumerate_subsets(3, 2, 3, start=13)))
    assert parts == full


def test_enumerate_checks_budget_eagerly():
    """The budget is checked on the call, before any subset is produced"""
    with pytest.raises(BudgetExceededError):
        enumerate_subsets(3, 2, 3, budget=10)
    with pytest.raises(BudgetExceededError):
        enumerate_gotzmann(3, 2, 3, budget=10)
    with pytest.raises(ValueError):
        enumerate_gotzmann(2, 2, 4)


def test_enumerate_gotzmann_examples():
    two = list(enumerate_gotzmann(2, 2, 2))
    assert lexsegment(2, 2, 2) in two
    assert SQUARES_2 not in two
    assert len(two) == 2

    # a 5-subset of M^2 in three variables is Gotzmann iff it misses a square
    five = list(enumerate_gotzmann(3, 2, 5))
    assert LEX_3_2_5 in five
    assert len(five) == 3

    assert list(enumerate_gotzmann(3, 2, 6)) == [all_monomials(3, 2)]


def test_enumerate_gotzmann_matches_filter():
    for n, d in ((2, 3), (3, 2), (4, 1)):
        for a in range(0, len(all_monomials(n, d)) + 1):
            expected = [V for V in enumerate_subsets(n, d, a) if is_gotzmann(V)]
            assert list(enumerate_gotzmann(n, d, a)) == expected
            for V in expected:
                assert len(shadow(V)) == macaulay_bound(V)
