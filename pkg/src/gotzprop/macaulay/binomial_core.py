# gotzprop.macaulay v1.0 Oct 2026

'''
Exact binomial coefficients and nth binomial (Macaulay) representations

Every positive integer h has a unique nth binomial representation

    h = C(h(n)+n, n) + C(h(n-1)+n-1, n-1) + ... + C(h(i)+i, i)

with h(n) >= h(n-1) >= ... >= h(i) >= 0 and i >= 1.  The growth operators
act on the terms of that representation:

    up(h, n)     h^<n>     every top index + 1
    down(h, n)   h_<n>     every bottom index - 1
    ddown(h, n)  h_<<n>>   top and bottom index - 1

with the boundary values 0^<n> = 0_<n> = 0_<<n>> = 0, 1^<0> = 1_<<0>> = 1
and 1_<0> = 0.  No other value is defined at n = 0.

All arithmetic is on Python integers; nothing here is cached or mutable.
'''

from dataclasses import dataclass
from typing import Tuple

from scipy.special import comb


def binom(a, b):
    """
    Exact binomial coefficient C(a, b) as a Python int.

    Input:
        a, b = nonnegative integers; b > a is allowed and gives 0
    """
    if a < 0 or b < 0:
        raise ValueError('binom needs nonnegative arguments, got (%d, %d)' % (a, b))
    return int(comb(a, b, exact=True))


@dataclass(frozen=True)
class BinomialTerm:
    """One term C(top, bottom) of a binomial sum."""

    top: int
    bottom: int

    def __post_init__(self):
        if self.bottom < 0 or self.top < self.bottom:
            raise ValueError('invalid binomial term C(%d,%d)' % (self.top, self.bottom))

    @property
    def value(self):
        return binom(self.top, self.bottom)

    def __str__(self):
        return 'C(%d,%d)' % (self.top, self.bottom)


@dataclass(frozen=True)
class BinomialRep:
    """
    nth binomial representation of a positive integer.

    terms are ordered by strictly decreasing bottom index n, n-1, ..., i;
    ambient is n.  Construction validates the representation invariants.
    """

    terms: Tuple[BinomialTerm, ...]
    ambient: int

    def __post_init__(self):
        object.__setattr__(self, 'terms', tuple(self.terms))
        _validate_rep(self.terms, self.ambient)

    @property
    def h_values(self):
        """(h(n), h(n-1), ..., h(i))"""
        return tuple(t.top - t.bottom for t in self.terms)

    @property
    def lowest(self):
        """The index i of the last term."""
        return self.terms[-1].bottom

    @property
    def value(self):
        return terms_value(self.terms)

    def __str__(self):
        return rep_terms_text(self)


def _validate_rep(terms, ambient):
    if ambient < 1:
        raise ValueError('representation order must be >= 1, got %d' % ambient)
    if len(terms) == 0:
        raise ValueError('a binomial representation has at least one term')

    expected = ambient
    previous_h = None
    for term in terms:
        if term.bottom != expected:
            raise ValueError('bottom indices must run %d, %d, ... consecutively; found %d'
                             % (ambient, ambient - 1, term.bottom))
        h = term.top - term.bottom
        if previous_h is not None and h > previous_h:
            raise ValueError('h(j) must be weakly decreasing; %d follows %d' % (h, previous_h))
        previous_h = h
        expected -= 1

    if terms[-1].bottom < 1:
        raise ValueError('lowest bottom index must be >= 1')


def terms_value(terms):
    """Exact value of an arbitrary binomial sum."""
    return sum(binom(t.top, t.bottom) for t in terms)


def _largest_alpha(remaining, j, strict=False):
    """
    Largest alpha >= 0 with C(alpha+j, j) <= remaining (< remaining if strict).

    Doubles an upper bracket until it overshoots, then bisects; floors at 0
    when the condition already fails at alpha = 0.
    """
    if j == 1:
        # C(alpha+1, 1) = alpha + 1
        alpha = remaining - 2 if strict else remaining - 1
        return max(alpha, 0)

    def fits(alpha):
        value = binom(alpha + j, j)
        return value < remaining if strict else value <= remaining

    if not fits(0):
        return 0
    low, high = 0, 1
    while fits(high):
        low, high = high, 2 * high
    # fits(low) and not fits(high)
    while high - low > 1:
        middle = (low + high) // 2
        if fits(middle):
            low = middle
        else:
            high = middle
    return low


def macaulay_rep(h, n):
    """
    nth binomial representation of h, built greedily.

    Input:
        h >= 1, n >= 1
    Output:
        BinomialRep whose terms sum to h

    At each bottom index j = n, n-1, ... the largest C(alpha+j, j) not
    exceeding the remaining value is taken; the loop stops when nothing
    remains.  Validity of the result is checked on construction.
    """
    if h < 1:
        raise ValueError('binomial representation needs h >= 1, got %d' % h)
    if n < 1:
        raise ValueError('binomial representation needs n >= 1, got %d' % n)

    terms = []
    remaining = h
    for j in range(n, 0, -1):
        if remaining == 0:
            break
        alpha = _largest_alpha(remaining, j)
        term = BinomialTerm(alpha + j, j)
        terms.append(term)
        remaining -= term.value

    if remaining != 0:
        raise RuntimeError('greedy representation of h=%d, n=%d left %d unrepresented'
                           % (h, n, remaining))

    rep = BinomialRep(tuple(terms), n)
    if rep.value != h:
        raise RuntimeError('representation of h=%d, n=%d evaluates to %d' % (h, n, rep.value))
    return rep


def rep_eval(rep):
    """Integer represented by rep."""
    return rep.value


def rep_vector(rep):
    """
    Top indices (h(n)+n, ..., h(i)+i) zero-padded to length n.

    Tops are strictly decreasing and positive, so a zero pad never ties
    with a real term.
    """
    tops = tuple(t.top for t in rep.terms)
    return tops + (0,) * (rep.ambient - len(tops))


def rep_compare(a, b):
    """
    Order of the integers represented by a and b: -1, 0 or 1.

    Decided on the padded top-index vectors in lexicographic order, which
    agrees with the order of the represented integers.
    """
    if a.ambient != b.ambient:
        raise ValueError('cannot compare representations of order %d and %d'
                         % (a.ambient, b.ambient))
    va = rep_vector(a)
    vb = rep_vector(b)
    return (va > vb) - (va < vb)


def rep_terms_text(rep):
    """'C(3,2)+C(2,1)' rendering of the terms."""
    return '+'.join(str(t) for t in rep.terms)


def shift_plus_one(terms):
    """
    The [+1] shift: every top index incremented, bottoms unchanged.

    Accepts any list of terms, not only valid representations.
    """
    return [BinomialTerm(t.top + 1, t.bottom) for t in terms]


def _check_convention(h, n, name):
    if h < 0 or n < 0:
        raise ValueError('%s needs h >= 0 and n >= 0, got h=%d, n=%d' % (name, h, n))
    if n == 0 and h >= 2:
        raise ValueError('%s(%d, 0) is undefined; only h = 0, 1 have values at n = 0'
                         % (name, h))


def _apply(h, n, dtop, dbottom):
    rep = macaulay_rep(h, n)
    return sum(binom(t.top + dtop, t.bottom + dbottom) for t in rep.terms)


def up(h, n):
    """h^<n>: every top index of the nth representation raised by one."""
    _check_convention(h, n, 'up')
    if h == 0:
        return 0
    if n == 0:
        return 1
    return _apply(h, n, 1, 0)


def down(h, n):
    """h_<n>: every bottom index of the nth representation lowered by one."""
    _check_convention(h, n, 'down')
    if h == 0 or n == 0:
        return 0
    return _apply(h, n, 0, -1)


def ddown(h, n):
    """h_<<n>>: top and bottom indices of the nth representation lowered by one."""
    _check_convention(h, n, 'ddown')
    if h == 0:
        return 0
    if n == 0:
        return 1
    return _apply(h, n, -1, -1)


def remainder(h, n):
    """
    (alpha, h - C(alpha+n, n)) with alpha = max{0, max{a : h - C(a+n, n) > 0}}.

    rem is 0 exactly when h = 1.  For h > 1 it is C(h(n)+n-1, n-1) when the
    representation has a single term and the tail of the representation
    otherwise; in both cases 1 <= rem <= C(alpha+n, n-1).
    """
    if h < 1:
        raise ValueError('remainder needs h >= 1, got %d' % h)
    if n < 1:
        raise ValueError('remainder needs n >= 1, got %d' % n)

    if h == 1:
        # the inner set only holds negative alpha; the outer max gives 0
        return 0, 0

    alpha = _largest_alpha(h, n, strict=True)
    return alpha, h - binom(alpha + n, n)


def iterate_up(h, n, steps):
    """[h, h^<n>, (h^<n>)^<n>, ...] with steps applications."""
    chain = [h]
    for _ in range(steps):
        chain.append(up(chain[-1], n))
    return chain


__all__ = [
    'BinomialTerm', 'BinomialRep', 'binom', 'macaulay_rep', 'rep_eval',
    'rep_vector', 'rep_compare', 'rep_terms_text', 'shift_plus_one',
    'terms_value', 'up', 'down', 'ddown', 'remainder', 'iterate_up',
]
