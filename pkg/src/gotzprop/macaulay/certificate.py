# gotzprop.macaulay v1.0 Oct 2026

'''
Persistence certificates

A certificate for a Gotzmann set V is the tree of splits behind the inductive
proof of persistence.  At every node the gcd u of the set is stripped first;
the quotient W = (1/u) V is then

    Singleton   |W| = 1
    FullSet     W = M^e, e = deg(V) - deg(u)
    Split       W split at its smallest splitting index i; kept child is
                K_i(W) in n variables, dropped child is D_i(W) read in the
                n-1 variables other than x_i

check_certificate never trusts the tree: it recomputes every gcd, split and
count from the sets and re-evaluates the numeric identities.

Text formats
------------
tree     one node per line, two spaces of indent per level, kept child
         before dropped child:
             Split i=1 gcd=1 n=3 d=2 a=5 c=3 b=2
               FullSet gcd=x1 n=3 d=2 a=3
               FullSet gcd=x1 n=2 d=2 a=2
machine  preorder, one node per line, '-' for fields a leaf does not have:
             <id> <parent> <kind> <n> <d> <i> <u> <a> <b> <c>
         parent is -1 for the root; u is written in exponent-vector form
         joined by commas, e.g. 1,0,0
'''

from dataclasses import dataclass
from typing import Optional

from gotzprop.macaulay.binomial_core import ddown, remainder
from gotzprop.macaulay.gotzmann_engine import (
    NotGotzmannError, PersistenceInconsistencyError, doubled_growth_holds,
    dropped_in_subring, find_splitting_index, growth, is_gotzmann,
    splitting_conditions,
)
from gotzprop.macaulay.monomial_algebra import (
    Monomial, divide_out, is_full, set_gcd, split,
)
from gotzprop.macaulay.monomial_io import format_monomial, format_set

FULL_SET = 'FullSet'
SINGLETON = 'Singleton'
SPLIT = 'Split'

node_kinds = (FULL_SET, SINGLETON, SPLIT)


@dataclass(frozen=True)
class PersistenceCertificate:
    """
    One node of a persistence certificate.

    Attributes
    ----------
    kind : str
        'FullSet', 'Singleton' or 'Split'
    n_vars, degree : int
        context of the set this node certifies (before the gcd is stripped)
    gcd_removed : Monomial
        gcd of that set
    size : int
        a = |V|
    index : int or None
        splitting index i (Split nodes only)
    kept_size, dropped_size : int
        c = |K_i|, b = |D_i| (Split nodes only, else 0)
    kept_child, dropped_child : PersistenceCertificate or None
    """

    kind: str
    n_vars: int
    degree: int
    gcd_removed: Monomial
    size: int
    index: Optional[int] = None
    kept_size: int = 0
    dropped_size: int = 0
    kept_child: Optional['PersistenceCertificate'] = None
    dropped_child: Optional['PersistenceCertificate'] = None

    def __post_init__(self):
        if self.kind not in node_kinds:
            raise ValueError('unknown certificate node kind %r' % self.kind)

    @property
    def children(self):
        if self.kind != SPLIT:
            return ()
        return (self.kept_child, self.dropped_child)


def build_certificate(V):
    """
    Certificate tree for a nonempty Gotzmann set V.

    Raises NotGotzmannError if V is not Gotzmann and ValueError if V is
    empty.  Split nodes are checked for the count identities as they are
    built; a failure there raises PersistenceInconsistencyError.
    """
    if len(V) == 0:
        raise ValueError('the empty set has no persistence certificate')
    if not is_gotzmann(V):
        raise NotGotzmannError('build_certificate needs a Gotzmann set\n%s' % format_set(V))
    return _build(V)


def _build(V):
    u = set_gcd(V)
    W = divide_out(V, u)
    n = V.n_vars

    if len(W) == 1:
        return PersistenceCertificate(SINGLETON, n, V.degree, u, len(V))
    if is_full(W):
        return PersistenceCertificate(FULL_SET, n, V.degree, u, len(V))

    i, result = find_splitting_index(W)
    a, c, b = len(W), len(result.kept), len(result.dropped)
    problem = _split_count_problem(a, b, c, n)
    if problem is not None:
        raise PersistenceInconsistencyError('%s at index %d for\n%s' % (problem, i, format_set(V)))

    return PersistenceCertificate(
        SPLIT, n, V.degree, u, a, index=i, kept_size=c, dropped_size=b,
        kept_child=_build(result.kept),
        dropped_child=_build(dropped_in_subring(result)),
    )


def _split_count_problem(a, b, c, n):
    """Message for the first count identity that fails at a Split node, else None."""
    if a != b + c:
        return 'a=%d != b+c=%d' % (a, b + c)
    rem = remainder(a, n - 1)[1]
    if not rem <= b < ddown(a, n - 1):
        return 'b=%d outside [%d, %d)' % (b, rem, ddown(a, n - 1))
    if growth(c, n - 1) + growth(b, n - 2) != growth(a, n - 1):
        return 'up(c,n-1)+up(b,n-2) != up(a,n-1) for a=%d b=%d c=%d' % (a, b, c)
    if not doubled_growth_holds(a, b, c, n):
        return 'doubled growth identity fails for a=%d b=%d c=%d' % (a, b, c)
    return None


# ---------------------------------------------------------------------------
# Checking
# ---------------------------------------------------------------------------

def diagnose_certificate(cert, V):
    """
    Recheck cert against V.

    Output:
        (ok, path): path is '' when ok, otherwise the node path
        ('root', 'root/kept', 'root/kept/dropped', ...) and the reason
    """
    try:
        problem = _diagnose(cert, V, 'root')
    except ValueError as err:
        return False, 'root: %s' % err
    if problem is None:
        return True, ''
    return False, problem


def check_certificate(cert, V):
    """True when cert is a valid certificate for V."""
    return diagnose_certificate(cert, V)[0]


def _diagnose(cert, V, path):
    def fail(reason):
        return '%s: %s' % (path, reason)

    if cert is None:
        return fail('missing node')
    if len(V) == 0:
        return fail('empty set')
    if (cert.n_vars, cert.degree) != (V.n_vars, V.degree):
        return fail('context (n=%d, d=%d) but the set has (n=%d, d=%d)'
                    % (cert.n_vars, cert.degree, V.n_vars, V.degree))
    if cert.size != len(V):
        return fail('a=%d but |V|=%d' % (cert.size, len(V)))

    u = set_gcd(V)
    if cert.gcd_removed != u:
        return fail('gcd %s recorded, %s found' % (cert.gcd_removed, u))
    W = divide_out(V, u)

    if cert.kind == SINGLETON:
        return None if len(W) == 1 else fail('Singleton leaf for %d members' % len(W))
    if cert.kind == FULL_SET:
        return None if is_full(W) else fail('FullSet leaf for a set that is not M^%d' % W.degree)

    # Split
    n = W.n_vars
    if len(W) <= 1 or is_full(W):
        return fail('Split node where a leaf is required')
    if cert.index is None or not 1 <= cert.index <= n:
        return fail('splitting index %r out of range 1..%d' % (cert.index, n))
    if not is_gotzmann(W):
        return fail('set is not Gotzmann')

    result = split(W, cert.index)
    a, c, b = len(W), len(result.kept), len(result.dropped)
    if (cert.kept_size, cert.dropped_size) != (c, b):
        return fail('counts c=%d b=%d recorded, c=%d b=%d found'
                    % (cert.kept_size, cert.dropped_size, c, b))

    conditions = splitting_conditions(W, cert.index, result)
    for key in ('kept_gotzmann', 'dropped_gotzmann', 'strict_bound',
                'containment', 'doubled_growth'):
        if not conditions[key]:
            return fail('index %d fails %s' % (cert.index, key.replace('_', ' ')))
    problem = _split_count_problem(a, b, c, n)
    if problem is not None:
        return fail(problem)

    return (_diagnose(cert.kept_child, result.kept, path + '/kept')
            or _diagnose(cert.dropped_child, dropped_in_subring(result), path + '/dropped'))


# ---------------------------------------------------------------------------
# Reporting
# ---------------------------------------------------------------------------

def certificate_depth(cert):
    """Number of levels; a single leaf has depth 1."""
    if cert.kind != SPLIT:
        return 1
    return 1 + max(certificate_depth(child) for child in cert.children)


def certificate_leaves(cert):
    """Leaf nodes, kept before dropped."""
    if cert.kind != SPLIT:
        return [cert]
    return certificate_leaves(cert.kept_child) + certificate_leaves(cert.dropped_child)


def _preorder(cert, parent=-1):
    nodes = []

    def visit(node, parent_id):
        node_id = len(nodes)
        nodes.append((node_id, parent_id, node))
        for child in node.children:
            visit(child, node_id)

    visit(cert, parent)
    return nodes


def format_tree(cert):
    """Indented tree text."""
    lines = []

    def visit(node, level):
        fields = [node.kind]
        if node.kind == SPLIT:
            fields.append('i=%d' % node.index)
        fields.append('gcd=%s' % format_monomial(node.gcd_removed))
        fields.append('n=%d d=%d a=%d' % (node.n_vars, node.degree, node.size))
        if node.kind == SPLIT:
            fields.append('c=%d b=%d' % (node.kept_size, node.dropped_size))
        lines.append('  ' * level + ' '.join(fields))
        for child in node.children:
            visit(child, level + 1)

    visit(cert, 0)
    return '\n'.join(lines) + '\n'


def format_machine(cert):
    """Machine format, one node per line in preorder."""
    lines = ['# id parent kind n d i u a b c']
    for node_id, parent_id, node in _preorder(cert):
        if node.kind == SPLIT:
            i, b, c = str(node.index), str(node.dropped_size), str(node.kept_size)
        else:
            i = b = c = '-'
        u = ','.join(str(e) for e in node.gcd_removed.exponents)
        lines.append('%d %d %s %d %d %s %s %d %s %s' % (
            node_id, parent_id, node.kind, node.n_vars, node.degree, i, u, node.size, b, c))
    return '\n'.join(lines) + '\n'


def parse_machine(text):
    """Certificate from machine-format text."""
    rows = {}
    order = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        fields = line.split()
        if len(fields) != 10:
            raise ValueError('certificate line %r does not have 10 fields' % line)
        node_id, parent_id = int(fields[0]), int(fields[1])
        kind = fields[2]
        if kind not in node_kinds:
            raise ValueError('unknown certificate node kind %r' % kind)
        if node_id in rows:
            raise ValueError('duplicate certificate node id %d' % node_id)

        def optional(token):
            return None if token == '-' else int(token)

        rows[node_id] = {
            'parent': parent_id, 'kind': kind, 'n': int(fields[3]), 'd': int(fields[4]),
            'i': optional(fields[5]),
            'u': Monomial(tuple(int(e) for e in fields[6].split(','))),
            'a': int(fields[7]), 'b': optional(fields[8]), 'c': optional(fields[9]),
            'children': [],
        }
        order.append(node_id)

    roots = [k for k in order if rows[k]['parent'] == -1]
    if len(roots) != 1:
        raise ValueError('certificate text needs exactly one root, found %d' % len(roots))
    for k in order:
        parent = rows[k]['parent']
        if parent == -1:
            continue
        if parent not in rows:
            raise ValueError('node %d refers to missing parent %d' % (k, parent))
        rows[parent]['children'].append(k)

    def assemble(k):
        row = rows[k]
        if row['kind'] != SPLIT:
            if row['children']:
                raise ValueError('leaf node %d has children' % k)
            return PersistenceCertificate(row['kind'], row['n'], row['d'], row['u'], row['a'])
        if len(row['children']) != 2:
            raise ValueError('Split node %d needs two children, has %d' % (k, len(row['children'])))
        kept_id, dropped_id = row['children']
        return PersistenceCertificate(
            SPLIT, row['n'], row['d'], row['u'], row['a'], index=row['i'],
            kept_size=row['c'], dropped_size=row['b'],
            kept_child=assemble(kept_id), dropped_child=assemble(dropped_id))

    return assemble(roots[0])


__all__ = [
    'PersistenceCertificate', 'FULL_SET', 'SINGLETON', 'SPLIT',
    'build_certificate', 'check_certificate', 'diagnose_certificate',
    'certificate_depth', 'certificate_leaves', 'format_tree',
    'format_machine', 'parse_machine',
]
