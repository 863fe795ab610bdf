# gotzprop.macaulay v1.0 Oct 2026

"""
Fast shadow sizes for subsets of M^d

The exhaustive sweeps ask for |MV| of every subset of M^d.  For a fixed
(n, d) the products x_j m, m in M^d, are tabulated once as indices into
M^{d+1}; the shadow size of a subset given by row indices is then the
number of distinct table entries in those rows.  The counting loop is
compiled with numba when it is installed.
"""

import numpy as np

from gotzprop.macaulay.monomial_algebra import (
    MonomialSet, all_monomials, count_monomials, lex_rank, Monomial,
)
from gotzprop.macaulay.numba_compat import njit, HAS_NUMBA


@njit
def _count_distinct_jit(table, rows, columns, size_next):  # pragma: no cover
    """Number of distinct table[r, c] over r in rows, c in columns"""
    seen = np.zeros(size_next, dtype=np.bool_)
    count = 0
    for r in rows:
        for c in columns:
            k = table[r, c]
            if not seen[k]:
                seen[k] = True
                count += 1
    return count


class ShadowTable:
    """
    Multiplication table of M^d in n variables.

    Attributes
    ----------
    n, d : int
    basis : MonomialSet
        M^d; row r of the table belongs to basis.members[r]
    table : np.ndarray, shape (|M^d|, n), int64
        table[r, j] = lex rank of x_{j+1} * basis.members[r] in M^{d+1}
    size_next : int
        |M^{d+1}|
    """

    def __init__(self, n, d):
        self.n = n
        self.d = d
        self.basis = all_monomials(n, d)
        self.size_next = count_monomials(n, d + 1)

        table = np.zeros((len(self.basis), n), dtype=np.int64)
        for r, m in enumerate(self.basis.members):
            for j in range(n):
                exps = list(m.exponents)
                exps[j] += 1
                table[r, j] = lex_rank(Monomial(tuple(exps)))
        self.table = table
        self._all_columns = np.arange(n, dtype=np.int64)

    def shadow_size(self, rows):
        """|MV| for V given by basis row indices."""
        rows = np.asarray(rows, dtype=np.int64)
        return int(_count_distinct_jit(self.table, rows, self._all_columns, self.size_next))

    def subset(self, rows):
        """MonomialSet of the given basis rows."""
        return MonomialSet(self.n, self.d, [self.basis.members[r] for r in rows])

    def __repr__(self):
        return 'ShadowTable(n=%d, d=%d, size=%d, numba=%s)' % (
            self.n, self.d, len(self.basis), HAS_NUMBA)


__all__ = ['ShadowTable']
