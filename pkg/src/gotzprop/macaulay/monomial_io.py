# gotzprop.macaulay v1.0 Oct 2026

'''
Text format for monomials and monomial-set files

Monomial:
    bare exponent vector   "2 0 1"
    symbolic               "x1^2*x3"
    constant               "1"

Monomial-set file:
    n=<int> d=<int>
    <monomial>
    ...

Blank lines and lines starting with '#' are skipped.  Files are always
written lex-descending in symbolic form.

A line reading "1" is the constant monomial unless the header says n=1,
d=1, where it is the exponent vector (1,), i.e. x1.
'''

import re

from gotzprop.macaulay.monomial_algebra import Monomial, MonomialSet

_header_re = re.compile(r'^\s*n\s*=\s*(\d+)\s+d\s*=\s*(\d+)\s*$')
_factor_re = re.compile(r'^x(\d+)(?:\^(\d+))?$')


def format_monomial(m):
    """Symbolic form, e.g. 'x1^2*x3'; '1' for the constant."""
    factors = []
    for k, e in enumerate(m.exponents, start=1):
        if e == 1:
            factors.append('x%d' % k)
        elif e > 1:
            factors.append('x%d^%d' % (k, e))
    return '*'.join(factors) if factors else '1'


def parse_monomial(text, n, degree=None):
    """
    Monomial in n variables from either text form.

    degree, when given, resolves the "1" ambiguity for n = 1 and is checked
    against the parsed monomial.
    """
    text = text.strip()
    if text == '':
        raise ValueError('empty monomial')

    if text == '1' and not (n == 1 and degree == 1):
        exps = [0] * n
    elif text[0].isdigit():
        try:
            exps = [int(tok) for tok in text.split()]
        except ValueError:
            raise ValueError('cannot read exponent vector %r' % text)
        if len(exps) != n:
            raise ValueError('exponent vector %r does not have %d entries' % (text, n))
    else:
        exps = [0] * n
        for factor in text.replace(' ', '').split('*'):
            match = _factor_re.match(factor)
            if match is None:
                raise ValueError('cannot read factor %r in %r' % (factor, text))
            k = int(match.group(1))
            if not 1 <= k <= n:
                raise ValueError('variable x%d out of range 1..%d' % (k, n))
            exps[k - 1] += int(match.group(2) or 1)

    m = Monomial(tuple(exps))
    if degree is not None and m.degree != degree:
        raise ValueError('%r has degree %d, expected %d' % (text, m.degree, degree))
    return m


def format_set(V):
    """Monomial-set file text (header plus one member per line)."""
    lines = ['n=%d d=%d' % (V.n_vars, V.degree)]
    lines.extend(format_monomial(m) for m in V.members)
    return '\n'.join(lines) + '\n'


def parse_set(text):
    """MonomialSet from monomial-set file text."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith('#')]
    if not lines:
        raise ValueError('monomial-set text has no header')

    match = _header_re.match(lines[0])
    if match is None:
        raise ValueError('bad header %r, expected "n=<int> d=<int>"' % lines[0])
    n, d = int(match.group(1)), int(match.group(2))
    if n < 1:
        raise ValueError('header needs n >= 1, got %d' % n)

    members = [parse_monomial(ln, n, degree=d) for ln in lines[1:]]
    return MonomialSet(n, d, members)


def read_set(path):
    """MonomialSet from a monomial-set file."""
    with open(path, 'r') as f:
        return parse_set(f.read())


def write_set(V, path):
    with open(path, 'w') as f:
        f.write(format_set(V))


__all__ = ['format_monomial', 'parse_monomial', 'format_set', 'parse_set',
           'read_set', 'write_set']
