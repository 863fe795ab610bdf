"""
Tests for binomial_core: exact binomials, representations and the
up / down / ddown / remainder operators
"""
import pytest
from hypothesis import given, settings, strategies as st

from gotzprop.macaulay.binomial_core import (
    BinomialRep, BinomialTerm, binom, ddown, down, iterate_up, macaulay_rep,
    remainder, rep_compare, rep_eval, rep_terms_text, rep_vector,
    shift_plus_one, terms_value, up,
)


def _pascal(a, b):
    """Independent binomial oracle from Pascal's rule"""
    row = [1]
    for _ in range(a):
        row = [1] + [row[k] + row[k + 1] for k in range(len(row) - 1)] + [1]
    return row[b] if b <= a else 0


@pytest.mark.parametrize("a,b,expected", [
    (4, 2, 6),
    (7, 0, 1),
    (30, 15, 155117520),
    (2, 5, 0),
    (0, 0, 1),
])
def test_binom_values(a, b, expected):
    """binom gives exact values, 0 for b > a"""
    assert binom(a, b) == expected


def test_binom_matches_pascal_oracle():
    """binom agrees with Pascal's rule on a small triangle"""
    for a in range(0, 31):
        for b in range(0, a + 3):
            assert binom(a, b) == _pascal(a, b), f"C({a},{b})"


def test_binom_is_exact_beyond_64_bits():
    """binom keeps full precision"""
    value = binom(200, 100)
    assert isinstance(value, int)
    assert value > 2**64
    assert value == binom(199, 99) + binom(199, 100)


def test_binom_rejects_negative():
    with pytest.raises(ValueError):
        binom(-1, 0)


@pytest.mark.parametrize("h,n,terms", [
    (1, 1, [(1, 1)]),
    (1, 4, [(4, 4)]),
    (5, 2, [(3, 2), (2, 1)]),
    (10, 3, [(5, 3)]),
    (4, 2, [(3, 2), (1, 1)]),
    (7, 1, [(7, 1)]),
])
def test_macaulay_rep_examples(h, n, terms):
    """Greedy representation for known values"""
    rep = macaulay_rep(h, n)
    assert [(t.top, t.bottom) for t in rep.terms] == terms
    assert rep.ambient == n
    assert rep_eval(rep) == h


@pytest.mark.parametrize("h,n", [(0, 2), (3, 0), (-1, 2)])
def test_macaulay_rep_rejects_nonpositive(h, n):
    with pytest.raises(ValueError):
        macaulay_rep(h, n)


def test_round_trip_and_chain_desk_range():
    """Round trip and the h(n) >= ... >= h(i) >= 0 chain, h <= 2000, n <= 8"""
    for n in range(1, 9):
        for h in range(1, 2001):
            rep = macaulay_rep(h, n)
            assert rep_eval(rep) == h
            hv = rep.h_values
            assert all(hv[k] >= hv[k + 1] for k in range(len(hv) - 1))
            assert hv[-1] >= 0
            assert rep.lowest >= 1


@given(st.integers(min_value=1, max_value=10**12), st.integers(min_value=1, max_value=12))
@settings(max_examples=200, deadline=None)
def test_round_trip_large_values(h, n):
    """Representations of large h stay exact"""
    assert rep_eval(macaulay_rep(h, n)) == h


@pytest.mark.parametrize("h,n", [(10**30, 2), (10**30 + 7, 3), (3**80, 2), (10**40, 5)])
def test_huge_values_are_greedy_and_fast(h, n):
    """Digits of very large h are found by bracketing, not by stepping"""
    rep = macaulay_rep(h, n)
    assert rep_eval(rep) == h
    top = rep.terms[0]
    assert binom(top.top, n) <= h < binom(top.top + 1, n)
    assert up(h, n) == h + down(h, n)

    alpha, rem = remainder(h, n)
    assert binom(alpha + n, n) < h <= binom(alpha + n + 1, n)
    assert rem == h - binom(alpha + n, n)


def test_binomial_rep_validation():
    """Invalid representations are rejected on construction"""
    BinomialRep((BinomialTerm(3, 2), BinomialTerm(2, 1)), 2)
    with pytest.raises(ValueError):
        # bottoms must start at n
        BinomialRep((BinomialTerm(2, 1),), 2)
    with pytest.raises(ValueError):
        # h(1) = 3 > h(2) = 1
        BinomialRep((BinomialTerm(3, 2), BinomialTerm(4, 1)), 2)
    with pytest.raises(ValueError):
        BinomialTerm(1, 2)


def test_rep_text():
    assert rep_terms_text(macaulay_rep(5, 2)) == 'C(3,2)+C(2,1)'
    assert str(macaulay_rep(1, 4)) == 'C(4,4)'


@pytest.mark.parametrize("h1,h2,expected", [
    (5, 5, 0),
    (5, 6, -1),
    (3, 4, -1),
    (6, 5, 1),
])
def test_rep_compare_examples(h1, h2, expected):
    assert rep_compare(macaulay_rep(h1, 2), macaulay_rep(h2, 2)) == expected


def test_rep_vector_pads_top_indices():
    """C(3,2) and C(3,2)+C(1,1) are told apart by their top vectors"""
    assert rep_vector(macaulay_rep(3, 2)) == (3, 0)
    assert rep_vector(macaulay_rep(4, 2)) == (3, 1)
    assert rep_vector(macaulay_rep(10, 3)) == (5, 0, 0)


def test_rep_compare_rejects_mixed_orders():
    with pytest.raises(ValueError):
        rep_compare(macaulay_rep(5, 2), macaulay_rep(5, 3))


@given(st.integers(min_value=1, max_value=5000), st.integers(min_value=1, max_value=5000),
       st.integers(min_value=1, max_value=8))
def test_rep_compare_agrees_with_integers(h1, h2, n):
    expected = (h1 > h2) - (h1 < h2)
    assert rep_compare(macaulay_rep(h1, n), macaulay_rep(h2, n)) == expected


@pytest.mark.parametrize("terms,expected", [
    ([(3, 2), (2, 1)], [(4, 2), (3, 1)]),
    ([], []),
    ([(2, 2)], [(3, 2)]),
])
def test_shift_plus_one(terms, expected):
    shifted = shift_plus_one([BinomialTerm(t, b) for t, b in terms])
    assert [(t.top, t.bottom) for t in shifted] == expected


def test_shift_plus_one_values():
    assert terms_value(shift_plus_one([BinomialTerm(3, 2), BinomialTerm(2, 1)])) == 9
    assert terms_value(shift_plus_one([BinomialTerm(2, 2)])) == 3


def test_shift_plus_one_accepts_noncanonical_sums():
    """Terms with repeated bottoms are shifted too"""
    terms = [BinomialTerm(2, 1), BinomialTerm(3, 1), BinomialTerm(4, 1)]
    assert terms_value(shift_plus_one(terms)) == 3 + 4 + 5


@pytest.mark.parametrize("func,h,n,expected", [
    (up, 0, 3, 0),
    (up, 5, 2, 9),
    (up, 1, 0, 1),
    (up, 0, 0, 0),
    (up, 10, 3, 20),
    (up, 7, 1, 8),
    (down, 5, 2, 4),
    (down, 0, 4, 0),
    (down, 1, 0, 0),
    (down, 10, 3, 10),
    (ddown, 5, 2, 3),
    (ddown, 0, 2, 0),
    (ddown, 1, 0, 1),
    (ddown, 10, 3, 6),
])
def test_operator_values(func, h, n, expected):
    """Operator values and the boundary conventions"""
    assert func(h, n) == expected


@pytest.mark.parametrize("func", [up, down, ddown])
def test_operators_reject_h_ge_2_at_n_0(func):
    with pytest.raises(ValueError):
        func(2, 0)


@pytest.mark.parametrize("func", [up, down, ddown])
def test_operators_zero_everywhere(func):
    for n in range(0, 10):
        assert func(0, n) == 0


@pytest.mark.parametrize("h,n,expected", [
    (1, 3, (0, 0)),
    (6, 2, (1, 3)),
    (5, 2, (1, 2)),
    (10, 3, (1, 6)),
    (2, 1, (0, 1)),
])
def test_remainder_examples(h, n, expected):
    assert remainder(h, n) == expected


def test_remainder_rejects_zero():
    with pytest.raises(ValueError):
        remainder(0, 2)


def test_remainder_case_clauses():
    """rem is C(h(n)+n-1, n-1) for one-term representations and the tail otherwise"""
    for n in range(1, 7):
        for h in range(2, 800):
            rep = macaulay_rep(h, n)
            alpha, rem = remainder(h, n)
            assert rem >= 1
            assert rem <= binom(alpha + n, n - 1)
            if len(rep.terms) == 1:
                assert rem == binom(rep.h_values[0] + n - 1, n - 1)
            else:
                assert rem == sum(t.value for t in rep.terms[1:])


@given(st.integers(min_value=1, max_value=20000), st.integers(min_value=1, max_value=8))
def test_remainder_splits_up(h, n):
    """up(h,n) = up(C(alpha+n,n),n) + up(rem,n-1)"""
    alpha, rem = remainder(h, n)
    assert up(h, n) == up(binom(alpha + n, n), n) + up(rem, n - 1)


@given(st.integers(min_value=1, max_value=20000), st.integers(min_value=1, max_value=8))
def test_up_is_h_plus_down(h, n):
    assert up(h, n) == h + down(h, n)


@given(st.integers(min_value=1, max_value=20000), st.integers(min_value=2, max_value=8))
def test_up_of_ddown_is_down(h, n):
    assert up(ddown(h, n), n - 1) == down(h, n)


@given(st.integers(min_value=1, max_value=20000), st.integers(min_value=1, max_value=8))
def test_up_monotone_in_h(h, n):
    assert up(h, n) < up(h + 1, n)


@given(st.integers(min_value=1, max_value=20000), st.integers(min_value=1, max_value=7))
def test_up_grows_with_n(h, n):
    assert up(h, n) < up(h, n + 1)


def test_iterate_up_chain():
    assert iterate_up(5, 2, 4) == [5, 9, 14, 20, 27]
    assert iterate_up(3, 2, 0) == [3]
