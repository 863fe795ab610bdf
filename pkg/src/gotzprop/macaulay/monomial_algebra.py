# gotzprop.macaulay v1.0 Oct 2026

'''
Monomials, lexicographic order and same-degree monomial sets

A monomial x1^a1 x2^a2 ... xn^an is stored as its exponent vector.
Lex order: A < B when the leftmost nonzero entry of B - A is positive,
which is plain tuple comparison of exponent vectors.

A MonomialSet V lives in a fixed context (n variables, degree d).  Members
are deduplicated and kept in strictly descending lex order, so two sets are
equal exactly when their member lists are equal.  The exponent matrix is
held as a numpy array of shape (|V|, n) for the set operations:

    shadow(V)                 MV = {x_i v}
    restricted_shadow(V, i)   M_i-bar V, every variable except x_i
    set_gcd(V)                componentwise minimum
    split(V, i)               K_i(V), D_i(V) by divisibility by x_i gcd(V)
    divide_out(V, u)          (1/u) V
    restrict_vars(V, i)       V read in the ring without x_i

Variable indices are 1-based in every public function.
'''

from dataclasses import dataclass
from itertools import islice

import numpy as np

from gotzprop.macaulay.binomial_core import binom


@dataclass(frozen=True)
class Monomial:
    """Exponent vector of a monomial; degree is the exponent sum."""

    exponents: tuple

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise ValueError('negative exponent in %s' % (exps,))
        object.__setattr__(self, 'exponents', exps)

    @property
    def n_vars(self):
        return len(self.exponents)

    @property
    def degree(self):
        return sum(self.exponents)

    def divides(self, other):
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other):
        _check_same_vars(self.n_vars, other.n_vars)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __str__(self):
        from gotzprop.macaulay.monomial_io import format_monomial
        return format_monomial(self)


def variable(n, i):
    """The monomial x_i in n variables."""
    _check_index(n, i)
    exps = [0] * n
    exps[i - 1] = 1
    return Monomial(tuple(exps))


def one(n):
    """The constant monomial 1 in n variables."""
    return Monomial((0,) * n)


def _check_same_vars(n1, n2):
    if n1 != n2:
        raise ValueError('variable counts differ: %d vs %d' % (n1, n2))


def _check_index(n, i):
    if not 1 <= i <= n:
        raise ValueError('variable index %d out of range 1..%d' % (i, n))


def lex_compare(a, b):
    """-1, 0 or 1 as a is lex-smaller, equal or lex-greater than b."""
    _check_same_vars(a.n_vars, b.n_vars)
    return (a.exponents > b.exponents) - (a.exponents < b.exponents)


class MonomialSet:
    """
    Deduplicated, lex-descending set of degree-d monomials in n variables.

    Attributes
    ----------
    n_vars : int
    degree : int
    members : tuple[Monomial]
        strictly descending lex order
    exponents : np.ndarray, shape (len, n_vars), int64
    """

    __slots__ = ('n_vars', 'degree', 'members', 'exponents', '_keys')

    def __init__(self, n_vars, degree, members=()):
        if n_vars < 1:
            raise ValueError('a monomial set needs n_vars >= 1, got %d' % n_vars)
        if degree < 0:
            raise ValueError('degree must be >= 0, got %d' % degree)

        keys = set()
        for m in members:
            exps = m.exponents if isinstance(m, Monomial) else tuple(int(e) for e in m)
            if len(exps) != n_vars:
                raise ValueError('monomial %s does not have %d variables' % (exps, n_vars))
            if sum(exps) != degree or any(e < 0 for e in exps):
                raise ValueError('monomial %s is not in degree %d' % (exps, degree))
            keys.add(exps)

        ordered = sorted(keys, reverse=True)
        self.n_vars = n_vars
        self.degree = degree
        self.members = tuple(Monomial(e) for e in ordered)
        self.exponents = np.array(ordered, dtype=np.int64).reshape(len(ordered), n_vars)
        self._keys = frozenset(keys)

    @classmethod
    def from_array(cls, n_vars, degree, array):
        """Set from an exponent matrix (rows may repeat)."""
        return cls(n_vars, degree, [tuple(row) for row in np.asarray(array).tolist()])

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, m):
        exps = m.exponents if isinstance(m, Monomial) else tuple(m)
        return exps in self._keys

    def __eq__(self, other):
        if not isinstance(other, MonomialSet):
            return NotImplemented
        return (self.n_vars == other.n_vars and self.degree == other.degree
                and self.members == other.members)

    def __hash__(self):
        return hash((self.n_vars, self.degree, self.members))

    def __repr__(self):
        body = ', '.join(str(m) for m in self.members)
        return 'MonomialSet(n=%d, d=%d, {%s})' % (self.n_vars, self.degree, body)

    def keys(self):
        """Exponent tuples of the members, as a frozenset."""
        return self._keys


def empty_set(n, d):
    return MonomialSet(n, d, ())


def _check_context(a, b):
    if a.n_vars != b.n_vars or a.degree != b.degree:
        raise ValueError('sets live in different contexts: (n=%d, d=%d) vs (n=%d, d=%d)'
                         % (a.n_vars, a.degree, b.n_vars, b.degree))


def union(a, b):
    _check_context(a, b)
    return MonomialSet(a.n_vars, a.degree, a.keys() | b.keys())


def intersection(a, b):
    _check_context(a, b)
    return MonomialSet(a.n_vars, a.degree, a.keys() & b.keys())


def difference(a, b):
    _check_context(a, b)
    return MonomialSet(a.n_vars, a.degree, a.keys() - b.keys())


def is_subset(a, b):
    _check_context(a, b)
    return a.keys() <= b.keys()


# ---------------------------------------------------------------------------
# M^d and lexsegments
# ---------------------------------------------------------------------------

def _compositions(d, n):
    """Exponent vectors of degree d in n variables, lex-descending."""
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _compositions(d - first, n - 1):
            yield (first,) + rest


def count_monomials(n, d):
    """|M^d| = C(d+n-1, n-1)."""
    return binom(d + n - 1, n - 1)


def all_monomials(n, d):
    """M^d in n variables; M^0 = {1}."""
    if n < 1:
        raise ValueError('need n >= 1, got %d' % n)
    if d < 0:
        raise ValueError('need d >= 0, got %d' % d)
    return MonomialSet(n, d, _compositions(d, n))


def lexsegment(n, d, a):
    """Lex(n, d, a): the a lex-greatest monomials of M^d."""
    size = count_monomials(n, d)
    if not 0 <= a <= size:
        raise ValueError('lexsegment size %d outside 0..%d for n=%d, d=%d' % (a, size, n, d))
    return MonomialSet(n, d, islice(_compositions(d, n), a))


def is_full(V):
    """V = M^d in its own context."""
    return len(V) == count_monomials(V.n_vars, V.degree)


def lex_rank(m):
    """0-based position of m in M^deg(m), lex-descending."""
    exps = m.exponents
    n = len(exps)
    d = sum(exps)
    rank = 0
    for k in range(n - 1):
        # monomials agreeing so far whose k-th exponent exceeds exps[k]
        for larger in range(exps[k] + 1, d + 1):
            rank += count_monomials(n - k - 1, d - larger)
        d -= exps[k]
    return rank


def lex_unrank(n, d, rank):
    """Monomial at position rank of M^d (inverse of lex_rank)."""
    if not 0 <= rank < count_monomials(n, d):
        raise ValueError('rank %d outside M^%d in %d variables' % (rank, d, n))
    exps = []
    for k in range(n - 1):
        first = d
        while True:
            block = count_monomials(n - k - 1, d - first)
            if rank < block:
                break
            rank -= block
            first -= 1
        exps.append(first)
        d -= first
    exps.append(d)
    return Monomial(tuple(exps))


# ---------------------------------------------------------------------------
# Shadows
# ---------------------------------------------------------------------------

def _multiply_by_variables(V, columns):
    n = V.n_vars
    if len(V) == 0 or len(columns) == 0:
        return empty_set(n, V.degree + 1)
    units = np.eye(n, dtype=np.int64)[list(columns)]
    products = (V.exponents[:, None, :] + units[None, :, :]).reshape(-1, n)
    return MonomialSet.from_array(n, V.degree + 1, np.unique(products, axis=0))


def shadow(V):
    """MV = {x_i v : v in V, i = 1..n}."""
    return _multiply_by_variables(V, range(V.n_vars))


def restricted_shadow(V, i):
    """M_i-bar V: multiplication by every variable except x_i."""
    _check_index(V.n_vars, i)
    return _multiply_by_variables(V, [j for j in range(V.n_vars) if j != i - 1])


def shadow_power(V, k):
    """M^k V."""
    for _ in range(k):
        V = shadow(V)
    return V


def multiply(V, u):
    """uV; degree grows by deg(u)."""
    _check_same_vars(V.n_vars, u.n_vars)
    if len(V) == 0:
        return empty_set(V.n_vars, V.degree + u.degree)
    shifted = V.exponents + np.asarray(u.exponents, dtype=np.int64)[None, :]
    return MonomialSet.from_array(V.n_vars, V.degree + u.degree, shifted)


def multiply_by_variable(V, i):
    """x_i V."""
    return multiply(V, variable(V.n_vars, i))


# ---------------------------------------------------------------------------
# gcd and the K_i / D_i split
# ---------------------------------------------------------------------------

def set_gcd(V):
    """gcd(V): componentwise minimum of the exponent vectors."""
    if len(V) == 0:
        raise ValueError('gcd of the empty set is undefined')
    return Monomial(tuple(V.exponents.min(axis=0).tolist()))


@dataclass(frozen=True)
class SplitResult:
    """
    K_i(V) and D_i(V) for a variable index i.

    kept holds the members divisible by x_i * gcd(V), dropped the rest.
    A singleton V is kept whole.
    """

    index: int
    gcd: Monomial
    kept: MonomialSet
    dropped: MonomialSet


def split(V, i):
    """K_i(V), D_i(V) as a SplitResult."""
    if len(V) == 0:
        raise ValueError('cannot split the empty set')
    _check_index(V.n_vars, i)

    u = set_gcd(V)
    if len(V) == 1:
        return SplitResult(i, u, V, empty_set(V.n_vars, V.degree))

    target = np.asarray(u.exponents, dtype=np.int64)
    target[i - 1] += 1
    mask = np.all(V.exponents >= target[None, :], axis=1)

    kept = MonomialSet.from_array(V.n_vars, V.degree, V.exponents[mask])
    dropped = MonomialSet.from_array(V.n_vars, V.degree, V.exponents[~mask])
    return SplitResult(i, u, kept, dropped)


def divide_out(V, u):
    """(1/u) V; u must divide every member."""
    _check_same_vars(V.n_vars, u.n_vars)
    degree = V.degree - u.degree
    if degree < 0:
        raise ValueError('%s has larger degree than the members of the set' % u)
    if len(V) == 0:
        return empty_set(V.n_vars, degree)

    quotient = V.exponents - np.asarray(u.exponents, dtype=np.int64)[None, :]
    if np.any(quotient < 0):
        bad = V.members[int(np.nonzero(np.any(quotient < 0, axis=1))[0][0])]
        raise ValueError('%s does not divide %s' % (u, bad))
    return MonomialSet.from_array(V.n_vars, degree, quotient)


def restrict_vars(V, i):
    """V read in the (n-1)-variable ring without x_i."""
    _check_index(V.n_vars, i)
    if V.n_vars == 1:
        raise ValueError('cannot delete the only variable')
    if len(V) and np.any(V.exponents[:, i - 1] > 0):
        bad = V.members[int(np.nonzero(V.exponents[:, i - 1] > 0)[0][0])]
        raise ValueError('%s involves x%d' % (bad, i))
    if len(V) == 0:
        return empty_set(V.n_vars - 1, V.degree)
    return MonomialSet.from_array(V.n_vars - 1, V.degree, np.delete(V.exponents, i - 1, axis=1))


__all__ = [
    'Monomial', 'MonomialSet', 'SplitResult', 'variable', 'one', 'lex_compare',
    'empty_set', 'union', 'intersection', 'difference', 'is_subset',
    'count_monomials', 'all_monomials', 'lexsegment', 'is_full', 'lex_rank',
    'lex_unrank', 'shadow', 'restricted_shadow', 'shadow_power', 'multiply',
    'multiply_by_variable', 'set_gcd', 'split', 'divide_out', 'restrict_vars',
]
