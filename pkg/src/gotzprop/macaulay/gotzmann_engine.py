# gotzprop.macaulay v1.0 Oct 2026

'''
Gotzmann detection, persistence and splitting indices

Macaulay's bound for V in M^d (n variables) is |MV| >= up(|V|, n-1); V is a
Gotzmann set when equality holds.  Persistence says that equality then
holds in every later degree as well:

    |M^{k+1} V| = up(|M^k V|, n-1)   for all k >= 0

The constructive route to persistence splits a Gotzmann set with gcd 1 at a
variable index i into K_i(V) and D_i(V).  With a = |V|, c = |K_i(V)| and
b = |D_i(V)| the index qualifies when

  gotzmann parts   K_i(V) is Gotzmann, (1/u) D_i(V) is Gotzmann in the n-1
                   variables other than x_i, and b < ddown(a, n-1)
  containment      x_i D_i(V) is contained in M_i-bar K_i(V)
  doubled growth   up(up(c, n-1), n-1) + up(up(b, n-2), n-2)
                       = up(up(a, n-1), n-1)

find_splitting_index returns the smallest such i; the recursion over these
splits lives in certificate.

Brute force enumeration of the a-subsets of M^d is by combination rank, so
that a sweep can be cut into rank ranges [start, stop) for worker processes.
'''

import numpy as np

import gotzprop.macaulay.config_macaulay as cfg
from gotzprop.macaulay.binomial_core import binom, up, ddown
from gotzprop.macaulay.monomial_algebra import (
    MonomialSet, all_monomials, count_monomials, divide_out, is_full, is_subset,
    multiply_by_variable, one, restrict_vars, restricted_shadow, set_gcd,
    shadow, split,
)
from gotzprop.macaulay.monomial_io import format_set
from gotzprop.macaulay.shadow_kernels import ShadowTable


class BudgetExceededError(RuntimeError):
    """An enumeration cell holds more subsets than the budget allows."""


class PersistenceInconsistencyError(RuntimeError):
    """A statement guaranteed by the theory failed on a concrete set."""


class NotGotzmannError(ValueError):
    """A set given where a Gotzmann set is required is not Gotzmann."""


def growth(h, n):
    """
    up(h, n) with 0 mapped to 0 for every n, negative n included.

    The split bound evaluates up(|D|, n-2), which for n = 1 has a negative
    order; D is empty there.
    """
    if h == 0:
        return 0
    return up(h, n)


def macaulay_bound(V):
    """up(|V|, n-1), the least possible |MV|."""
    return growth(len(V), V.n_vars - 1)


def is_gotzmann(V):
    """|MV| = up(|V|, n-1); the empty set is Gotzmann."""
    if len(V) == 0:
        return True
    return len(shadow(V)) == macaulay_bound(V)


def shadow_chain(V, steps):
    """[|V|, |MV|, |M^2 V|, ..., |M^steps V|]"""
    sizes = [len(V)]
    current = V
    for _ in range(steps):
        current = shadow(current)
        sizes.append(len(current))
    return sizes


def bound_chain(h, n, steps):
    """[h, up(h, n-1), up(up(h, n-1), n-1), ...] with steps applications."""
    chain = [h]
    for _ in range(steps):
        chain.append(growth(chain[-1], n - 1))
    return chain


def _check_steps(steps):
    if steps < 1:
        raise ValueError('steps must be >= 1, got %d' % steps)


def persistence_chains(V, steps=None):
    """
    Shadow sizes of V next to the iterated Macaulay bound.

    Input:
        V = Gotzmann MonomialSet
        steps = number of shadow iterations (config default if None)
    Output:
        (sizes, bounds, ok): sizes[k] = |M^k V|, bounds[k] the k-fold
        iterate of h -> up(h, n-1) from |V|; ok when the lists agree
    """
    steps = cfg.default_steps if steps is None else int(steps)
    _check_steps(steps)
    if not is_gotzmann(V):
        raise NotGotzmannError('set is not Gotzmann: |MV| = %d, up(%d, %d) = %d\n%s'
                               % (len(shadow(V)), len(V), V.n_vars - 1,
                                  macaulay_bound(V), format_set(V)))

    sizes = shadow_chain(V, steps)
    bounds = bound_chain(len(V), V.n_vars, steps)
    return sizes, bounds, sizes == bounds


def verify_persistence(V, steps=None):
    """
    True when |M^{k+1} V| = up(|M^k V|, n-1) for k = 0 .. steps-1.

    Raises NotGotzmannError when V itself misses the bound.
    """
    steps = cfg.default_steps if steps is None else int(steps)
    _check_steps(steps)
    if not is_gotzmann(V):
        raise NotGotzmannError('verify_persistence needs a Gotzmann set\n%s' % format_set(V))

    current = V
    for _ in range(steps):
        following = shadow(current)
        if len(following) != growth(len(current), V.n_vars - 1):
            return False
        current = following
    return True


# ---------------------------------------------------------------------------
# Splitting indices
# ---------------------------------------------------------------------------

def dropped_in_subring(result):
    """(1/u) D_i(V) read in the n-1 variables other than x_i."""
    quotient = divide_out(result.dropped, result.gcd)
    return restrict_vars(quotient, result.index)


def doubled_growth_holds(a, b, c, n):
    """Doubled growth identity on the counts a = |V|, b = |D|, c = |K|."""
    lhs = growth(growth(c, n - 1), n - 1) + growth(growth(b, n - 2), n - 2)
    return lhs == growth(growth(a, n - 1), n - 1)


def splitting_conditions(V, i, result=None):
    """
    Splitting conditions for V at index i.

    Output:
        dict with the split and the booleans
            kept_gotzmann, dropped_gotzmann, strict_bound,
            containment, doubled_growth, qualifies
    """
    n = V.n_vars
    if result is None:
        result = split(V, i)
    a, b, c = len(V), len(result.dropped), len(result.kept)

    if n == 2 and b > 1:
        raise PersistenceInconsistencyError(
            'D_%d(V) has %d > 1 members in two variables\n%s' % (i, b, format_set(V)))

    kept_gotzmann = is_gotzmann(result.kept)
    if b == 0:
        dropped_gotzmann = True
    elif n == 1:
        dropped_gotzmann = False
    else:
        dropped_gotzmann = is_gotzmann(dropped_in_subring(result))
    strict_bound = b < ddown(a, n - 1)
    containment = is_subset(multiply_by_variable(result.dropped, i),
                            restricted_shadow(result.kept, i))
    doubled = doubled_growth_holds(a, b, c, n)

    return {
        'split': result,
        'kept_gotzmann': kept_gotzmann,
        'dropped_gotzmann': dropped_gotzmann,
        'strict_bound': strict_bound,
        'containment': containment,
        'doubled_growth': doubled,
        'qualifies': (kept_gotzmann and dropped_gotzmann and strict_bound
                      and containment and doubled),
    }


def find_splitting_index(V):
    """
    Smallest i at which V satisfies the splitting conditions.

    Input:
        V = Gotzmann MonomialSet with gcd(V) = 1, V != M^d and |V| > 1
    Output:
        (i, SplitResult)

    Raises PersistenceInconsistencyError, with V in the monomial-set file
    format, if no index qualifies.
    """
    if len(V) <= 1:
        raise ValueError('a splitting index needs |V| > 1, got |V| = %d' % len(V))
    if set_gcd(V) != one(V.n_vars):
        raise ValueError('a splitting index needs gcd(V) = 1, got %s' % set_gcd(V))
    if is_full(V):
        raise ValueError('V = M^%d in %d variables has no splitting index'
                         % (V.degree, V.n_vars))
    if not is_gotzmann(V):
        raise NotGotzmannError('find_splitting_index needs a Gotzmann set\n%s' % format_set(V))

    for i in range(1, V.n_vars + 1):
        conditions = splitting_conditions(V, i)
        if conditions['qualifies']:
            return i, conditions['split']

    raise PersistenceInconsistencyError(
        'no variable index satisfies the splitting conditions for\n%s' % format_set(V))


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def subset_count(n, d, a):
    """C(|M^d|, a)."""
    return binom(count_monomials(n, d), a)


def check_cell(n, d, a, budget=None):
    """(|M^d|, C(|M^d|, a)) after checking a and the subset budget."""
    size = count_monomials(n, d)
    if not 0 <= a <= size:
        raise ValueError('subset size %d outside 0..%d for n=%d, d=%d' % (a, size, n, d))
    budget = cfg.resolve_budget(budget)
    total = binom(size, a)
    if total > budget:
        raise BudgetExceededError('C(%d, %d) = %d subsets of M^%d (n=%d) exceed the budget %d'
                                  % (size, a, total, d, n, budget))
    return size, total


def unrank_combination(rank, size, a):
    """
    The rank-th a-combination of range(size) in lexicographic order.

    Combinadic walk: at each position count the combinations that start
    with a smaller element and skip over them.
    """
    combo = []
    element = 0
    for position in range(a):
        remaining = a - position - 1
        while True:
            block = binom(size - element - 1, remaining)
            if rank < block:
                break
            rank -= block
            element += 1
        combo.append(element)
        element += 1
    return combo


def _next_combination(combo, size):
    """Lexicographic successor in place; False after the last combination."""
    a = len(combo)
    k = a - 1
    while k >= 0 and combo[k] == size - a + k:
        k -= 1
    if k < 0:
        return False
    combo[k] += 1
    for j in range(k + 1, a):
        combo[j] = combo[j - 1] + 1
    return True


def iter_subset_rows(size, a, start=0, stop=None):
    """Row-index tuples of the a-subsets of range(size) with rank in [start, stop)."""
    total = binom(size, a)
    stop = total if stop is None else min(stop, total)
    if start < 0 or start > stop:
        raise ValueError('rank range [%d, %d) is invalid for %d subsets' % (start, stop, total))
    if start == stop:
        return

    combo = unrank_combination(start, size, a)
    for _ in range(stop - start):
        yield tuple(combo)
        if not _next_combination(combo, size):
            return


def enumerate_subsets(n, d, a, budget=None, start=0, stop=None):
    """
    Every a-subset of M^d exactly once, ordered by combination rank.

    Input:
        n, d, a = context and subset size; 0 <= a <= |M^d|
        budget = subset cap for the cell (config default if None)
        start, stop = optional rank range [start, stop)
    Output:
        generator of MonomialSet
    """
    size, _ = check_cell(n, d, a, budget)
    basis = all_monomials(n, d).members
    return _subsets_from_rows(n, d, basis, iter_subset_rows(size, a, start, stop))


def _subsets_from_rows(n, d, basis, rows_iter):
    for rows in rows_iter:
        yield MonomialSet(n, d, [basis[r] for r in rows])


def enumerate_gotzmann(n, d, a, budget=None, start=0, stop=None):
    """
    The Gotzmann sets among enumerate_subsets(n, d, a).

    Shadow sizes are counted on the multiplication table of M^d; only the
    sets that meet the bound are materialized.
    """
    size, _ = check_cell(n, d, a, budget)
    table = ShadowTable(n, d)
    return _gotzmann_from_rows(table, growth(a, n - 1), iter_subset_rows(size, a, start, stop))


def _gotzmann_from_rows(table, target, rows_iter):
    for rows in rows_iter:
        if table.shadow_size(np.asarray(rows, dtype=np.int64)) == target:
            yield table.subset(rows)


__all__ = [
    'BudgetExceededError', 'PersistenceInconsistencyError', 'NotGotzmannError',
    'growth', 'macaulay_bound', 'is_gotzmann', 'shadow_chain', 'bound_chain',
    'persistence_chains', 'verify_persistence', 'dropped_in_subring',
    'doubled_growth_holds', 'splitting_conditions', 'find_splitting_index',
    'subset_count', 'check_cell', 'unrank_combination', 'iter_subset_rows',
    'enumerate_subsets', 'enumerate_gotzmann',
]
