# gotzprop.macaulay v1.0 Oct 2026

'''
Exhaustive and sampled checks of the growth and persistence statements

run_lemma_suite(lemma_id, ranges) sweeps one parameter space and returns
a LemmaReport.  Suite ids:

  numeric (binomial representations)
    L1_2         representation order = lex order of h-vectors; round trip
    L1_3         telescoping identity, also after the [+1] shift
    L1_4         up(h,n) = h + down(h,n); up(ddown(h,n), n-1) = down(h,n)
    L1_5         up(a,n) + up(b,n) > up(a+b,n); optional lexsegment witness
    L1_6         up(N,n) + up(a,n) <= up(b,n) + up(c,n), N = C(alpha+n,n),
                 and the equality carried one more application of up
    L1_7         up(h,n) < up(h,n+1), and h -> up(h,n) strictly increasing

  sets (exhaustive over the subsets of M^d, cell by cell)
    macaulay_1   |MV| >= up(|V|, n-1)
    lex_tight    |M Lex(n,d,a)| = up(a, n-1)
    persistence  shadow sizes of Gotzmann sets follow the iterated bound
    L2_1         M_i-bar D_i(V) in MV \\ x_i V, the split bound and its
                 equality characterization
    L2_2         rem(|V|, n-1) <= |D_i(V)| <= ddown(|V|, n-1) for Gotzmann V,
                 and M_i-bar D_i(V) = MV \\ x_i V when the upper bound is hit
    L2_3         every Gotzmann set has a certificate that checks
    claim_sharp  a Gotzmann gcd-1 set with |D_i| = ddown(|V|, n-1) for all i
                 is M^d
    gcd_shift    V and x_j V are Gotzmann together, |M x_j V| = |MV|

Set suites are cut into (n, d, a, rank range) tasks.  With parallel > 1 the
tasks run in a process pool; reports are merged in task order either way,
so the merged report does not depend on the number of workers.
'''

import warnings
from concurrent.futures import ProcessPoolExecutor

import numpy as np

import gotzprop.macaulay.config_macaulay as cfg
from gotzprop.macaulay.binomial_core import (
    BinomialTerm, binom, ddown, down, macaulay_rep, rep_compare, rep_eval,
    remainder, shift_plus_one, terms_value, up,
)
from gotzprop.macaulay.certificate import build_certificate, diagnose_certificate
from gotzprop.macaulay.gotzmann_engine import (
    BudgetExceededError, PersistenceInconsistencyError, check_cell,
    dropped_in_subring, growth, is_gotzmann, iter_subset_rows,
    persistence_chains, verify_persistence,
)
from gotzprop.macaulay.monomial_algebra import (
    Monomial, count_monomials, difference, intersection, is_full, is_subset,
    lexsegment, multiply, multiply_by_variable, one, restricted_shadow,
    set_gcd, shadow, split, union, variable,
)
from gotzprop.macaulay.monomial_io import format_set
from gotzprop.macaulay.numba_compat import HAS_NUMBA
from gotzprop.macaulay.shadow_kernels import ShadowTable


class LemmaReport:
    """
    Result of one suite run.

    Attributes
    ----------
    lemma_id : str
    params : dict
        the swept range, defaults filled in
    cases : int
        number of cases checked
    violations : list of dict
        each with 'case' (parameter text), 'detail' and optionally 'set'
        (monomial-set file text of the counterexample)
    """

    def __init__(self, lemma_id, params, cases=0, violations=None):
        self.lemma_id = lemma_id
        self.params = dict(params)
        self.cases = cases
        self.violations = list(violations or [])

    @property
    def passed(self):
        return len(self.violations) == 0

    def add(self, case, detail, V=None):
        entry = {'case': case, 'detail': detail}
        if V is not None:
            entry['set'] = format_set(V)
        self.violations.append(entry)

    def merge(self, other):
        """Report with the cases and violations of both, self first."""
        if other.lemma_id != self.lemma_id:
            raise ValueError('cannot merge reports of %s and %s' % (self.lemma_id, other.lemma_id))
        return LemmaReport(self.lemma_id, self.params, self.cases + other.cases,
                           self.violations + other.violations)

    def range_text(self):
        return ' '.join('%s=%s' % (k, _param_text(v)) for k, v in self.params.items())

    def to_text(self):
        lines = ['lemma=%s %s' % (self.lemma_id, self.range_text()),
                 'cases=%d violations=%d' % (self.cases, len(self.violations))]
        for entry in self.violations:
            lines.append('violation %s: %s' % (entry['case'], entry['detail']))
            if 'set' in entry:
                lines.extend('  ' + ln for ln in entry['set'].splitlines())
        return '\n'.join(lines) + '\n'

    def to_dict(self):
        params = {k: ([list(c) for c in v] if k == 'cells' else v)
                  for k, v in self.params.items()}
        return {'lemma': self.lemma_id, 'range': params, 'cases': self.cases,
                'violations': [dict(entry) for entry in self.violations],
                'passed': self.passed}

    def __repr__(self):
        return 'LemmaReport(%s, cases=%d, violations=%d)' % (
            self.lemma_id, self.cases, len(self.violations))


def merge_reports(reports):
    """Left-to-right merge of a nonempty sequence of reports."""
    reports = list(reports)
    merged = reports[0]
    for report in reports[1:]:
        merged = merged.merge(report)
    return merged


def _param_text(value):
    if isinstance(value, (tuple, list)):
        return ';'.join('(%d,%d)' % tuple(c) for c in value)
    return str(value)


def _object_table(values):
    return np.array(list(values), dtype=object)


def _up_table(n, max_h):
    """[up(0,n), up(1,n), ..., up(max_h,n)] as an object array."""
    return _object_table(up(h, n) for h in range(max_h + 1))


# ---------------------------------------------------------------------------
# Numeric suites
# ---------------------------------------------------------------------------

def _suite_rep_order(params):
    max_h, max_n = params['max_h'], params['max_n']
    report = LemmaReport('L1_2', params)
    for n in range(1, max_n + 1):
        previous = None
        for h in range(1, max_h + 1):
            rep = macaulay_rep(h, n)
            report.cases += 1
            if rep_eval(rep) != h:
                report.add('h=%d n=%d' % (h, n), 'representation evaluates to %d' % rep_eval(rep))
            if rep_compare(rep, rep) != 0:
                report.add('h=%d n=%d' % (h, n), 'representation does not compare equal to itself')
            if previous is not None:
                if rep_compare(previous, rep) != -1 or rep_compare(rep, previous) != 1:
                    report.add('h=%d n=%d' % (h, n),
                               'order against h-1 disagrees with the integers')
            previous = rep
    return report


def _suite_telescoping(params):
    max_h, max_n = params['max_h'], params['max_n']
    report = LemmaReport('L1_3', params)
    for n in range(1, max_n + 1):
        for h in range(0, max_h + 1):
            whole = [BinomialTerm(h + n, n)]
            for alpha in range(1, h + 1):
                pieces = [BinomialTerm(alpha - 1 + n, n)]
                pieces.extend(BinomialTerm(i + n - 1, n - 1) for i in range(alpha, h + 1))
                report.cases += 1
                case = 'h=%d n=%d alpha=%d' % (h, n, alpha)
                if terms_value(whole) != terms_value(pieces):
                    report.add(case, 'telescoping sum differs')
                if terms_value(shift_plus_one(whole)) != terms_value(shift_plus_one(pieces)):
                    report.add(case, 'telescoping sum differs after the [+1] shift')
    return report


def _suite_up_down(params):
    max_h, max_n = params['max_h'], params['max_n']
    report = LemmaReport('L1_4', params)
    hs = np.arange(1, max_h + 1)
    for n in range(1, max_n + 1):
        ups = _object_table(up(int(h), n) for h in hs)
        downs = _object_table(down(int(h), n) for h in hs)
        report.cases += len(hs)

        bad = np.nonzero(np.asarray(ups != hs.astype(object) + downs, dtype=bool))[0]
        for k in bad:
            report.add('h=%d n=%d' % (hs[k], n), 'up(h,n)=%d but h+down(h,n)=%d'
                       % (ups[k], hs[k] + downs[k]))

        if n >= 2:
            bridge = _object_table(up(ddown(int(h), n), n - 1) for h in hs)
            bad = np.nonzero(np.asarray(bridge != downs, dtype=bool))[0]
            for k in bad:
                report.add('h=%d n=%d' % (hs[k], n), 'up(ddown(h,n),n-1)=%d but down(h,n)=%d'
                           % (bridge[k], downs[k]))
    return report


def _lex_witness(a, b, m):
    """None, or the reason the lexsegment witness for up order m fails."""
    n = m + 1
    d = 0
    while count_monomials(n, d) <= a + b:
        d += 1
    Va = lexsegment(n, d, a)
    Vb = lexsegment(n, d, b)
    u = Va.members[-1]
    top = Monomial((d + 1,) + (0,) * (n - 1))
    first = multiply(Va, top)
    second = multiply(Vb, u * variable(n, n))

    if len(intersection(first, second)):
        return 'witness parts are not disjoint'
    if len(intersection(shadow(first), shadow(second))) == 0:
        return 'witness shadows do not overlap'
    size = len(shadow(union(first, second)))
    if not growth(a + b, m) <= size < growth(a, m) + growth(b, m):
        return 'witness shadow size %d outside [%d, %d)' % (
            size, growth(a + b, m), growth(a, m) + growth(b, m))
    return None


def _suite_superadditive(params):
    max_a, max_n = params['max_a'], params['max_n']
    report = LemmaReport('L1_5', params)
    idx = np.arange(1, max_a + 1)
    sums = np.add.outer(idx, idx)
    for n in range(1, max_n + 1):
        ups = _up_table(n, 2 * max_a)
        lhs = np.add.outer(ups[idx], ups[idx])
        ok = np.asarray(lhs > ups[sums], dtype=bool)
        report.cases += ok.size
        for ka, kb in np.argwhere(~ok):
            a, b = int(idx[ka]), int(idx[kb])
            report.add('a=%d b=%d n=%d' % (a, b, n), 'up(a)+up(b)=%d <= up(a+b)=%d'
                       % (lhs[ka, kb], ups[a + b]))

    if params.get('witness'):
        limit = params.get('witness_max', 6)
        for m in range(1, min(max_n, 2) + 1):
            for a in range(1, min(max_a, limit) + 1):
                for b in range(1, min(max_a, limit) + 1):
                    report.cases += 1
                    problem = _lex_witness(a, b, m)
                    if problem is not None:
                        report.add('witness a=%d b=%d n=%d' % (a, b, m), problem)
    return report


def _three_term_case(report, ups, alpha, n, a, b):
    N = binom(alpha + n, n)
    c = N + a - b
    lhs = ups(N) + ups(a)
    rhs = ups(b) + ups(c)
    case = 'alpha=%d n=%d a=%d b=%d c=%d' % (alpha, n, a, b, c)
    report.cases += 1
    if lhs > rhs:
        report.add(case, 'up(N)+up(a)=%d > up(b)+up(c)=%d' % (lhs, rhs))
    elif lhs == rhs:
        if ups(ups(N)) + ups(ups(a)) != ups(ups(b)) + ups(ups(c)):
            report.add(case, 'equality is not carried by a further application of up')


def _suite_three_term(params):
    report = LemmaReport('L1_6', params)
    cache = {}

    def ups_for(n):
        def value(h):
            key = (h, n)
            if key not in cache:
                cache[key] = up(h, n)
            return cache[key]
        return value

    for n in range(1, params['exhaustive_max_n'] + 1):
        ups = ups_for(n)
        for alpha in range(1, params['exhaustive_max_alpha'] + 1):
            N = binom(alpha + n, n)
            for a in range(1, N):
                for b in range(a + 1, N):
                    _three_term_case(report, ups, alpha, n, a, b)

    lo_n = params['exhaustive_max_n'] + 1
    hi_n = params['sampled_max_n']
    if params['samples'] > 0 and lo_n <= hi_n:
        rng = np.random.default_rng(params['seed'])
        for _ in range(params['samples']):
            n = int(rng.integers(lo_n, hi_n + 1))
            alpha = int(rng.integers(1, params['sampled_max_alpha'] + 1))
            N = binom(alpha + n, n)
            a = int(rng.integers(1, N - 1))
            b = int(rng.integers(a + 1, N))
            _three_term_case(report, ups_for(n), alpha, n, a, b)
    return report


def _suite_order_step(params):
    max_h, max_n = params['max_h'], params['max_n']
    report = LemmaReport('L1_7', params)
    hs = np.arange(1, max_h + 1)
    following = _up_table(1, max_h)[1:]
    for n in range(1, max_n + 1):
        current = following
        following = _up_table(n + 1, max_h)[1:]
        report.cases += len(hs)
        for k in np.nonzero(~np.asarray(current < following, dtype=bool))[0]:
            report.add('h=%d n=%d' % (hs[k], n), 'up(h,n)=%d >= up(h,n+1)=%d'
                       % (current[k], following[k]))
        for k in np.nonzero(~np.asarray(current[1:] > current[:-1], dtype=bool))[0]:
            report.add('h=%d n=%d' % (hs[k + 1], n), 'up(h,n) does not exceed up(h-1,n)')
    return report


def _suite_lex_tight(params):
    report = LemmaReport('lex_tight', params)
    for n in range(1, params['max_n'] + 1):
        for d in range(0, params['max_d'] + 1):
            for a in range(0, count_monomials(n, d) + 1):
                report.cases += 1
                size = len(shadow(lexsegment(n, d, a)))
                if size != growth(a, n - 1):
                    report.add('n=%d d=%d a=%d' % (n, d, a), '|M Lex|=%d but up(a,n-1)=%d'
                               % (size, growth(a, n - 1)))
    return report


# ---------------------------------------------------------------------------
# Set suites
# ---------------------------------------------------------------------------

def _case_text(n, d, a):
    return 'n=%d d=%d a=%d' % (n, d, a)


def _check_macaulay(table, rows, n, d, a, params):
    size = table.shadow_size(rows)
    if size < growth(a, n - 1):
        return 1, [('|MV|=%d < up(%d,%d)=%d' % (size, a, n - 1, growth(a, n - 1)),
                    table.subset(rows))]
    return 1, []


def _gotzmann_rows(table, rows, n, a):
    return table.shadow_size(rows) == growth(a, n - 1)


def _check_persistence(table, rows, n, d, a, params):
    if not _gotzmann_rows(table, rows, n, a):
        return 0, []
    V = table.subset(rows)
    sizes, bounds, ok = persistence_chains(V, params['steps'])
    if not ok or not verify_persistence(V, params['steps']):
        return 1, [('shadow sizes %s, bound %s' % (sizes, bounds), V)]
    return 1, []


def _dropped_gotzmann(result, n):
    if len(result.dropped) == 0:
        return True
    return n > 1 and is_gotzmann(dropped_in_subring(result))


def _check_split_bound(table, rows, n, d, a, params):
    if a == 0:
        return 0, []
    V = table.subset(rows)
    MV = shadow(V)
    cases = 0
    found = []
    for i in range(1, n + 1):
        cases += 1
        result = split(V, i)
        b, c = len(result.dropped), len(result.kept)
        outside = difference(MV, multiply_by_variable(V, i))
        if not is_subset(restricted_shadow(result.dropped, i), outside):
            found.append(('i=%d: M_i-bar D_i not in MV \\ x_i V' % i, V))

        bound = growth(c, n - 1) + growth(b, n - 2)
        if len(MV) < bound:
            found.append(('i=%d: |MV|=%d below split bound %d' % (i, len(MV), bound), V))

        parts = (is_gotzmann(result.kept) and _dropped_gotzmann(result, n)
                 and is_subset(multiply_by_variable(result.dropped, i),
                               restricted_shadow(result.kept, i)))
        if (len(MV) == bound) != parts:
            found.append(('i=%d: equality %s but gotzmann parts and containment %s'
                          % (i, len(MV) == bound, parts), V))
    return cases, found


def _remainder_value(a, m):
    if a <= 1:
        return 0
    return remainder(a, m)[1]


def _check_dropped_range(table, rows, n, d, a, params):
    if a == 0 or not _gotzmann_rows(table, rows, n, a):
        return 0, []
    V = table.subset(rows)
    MV = shadow(V)
    lower = _remainder_value(a, n - 1)
    upper = ddown(a, n - 1)
    cases = 0
    found = []
    for i in range(1, n + 1):
        cases += 1
        result = split(V, i)
        b = len(result.dropped)
        if not lower <= b <= upper:
            found.append(('i=%d: |D_i|=%d outside [%d, %d]' % (i, b, lower, upper), V))
        elif a >= 2 and b == upper:
            outside = difference(MV, multiply_by_variable(V, i))
            if restricted_shadow(result.dropped, i) != outside:
                found.append(('i=%d: |D_i| = ddown but M_i-bar D_i != MV \\ x_i V' % i, V))
    return cases, found


def _check_claim_sharp(table, rows, n, d, a, params):
    if a == 0 or not _gotzmann_rows(table, rows, n, a):
        return 0, []
    V = table.subset(rows)
    if set_gcd(V) != one(n):
        return 0, []
    upper = ddown(a, n - 1)
    if all(len(split(V, i).dropped) == upper for i in range(1, n + 1)) and not is_full(V):
        return 1, [('|D_i| = ddown(%d,%d) for every i but V is not M^%d' % (a, n - 1, d), V)]
    return 1, []


def _check_certificate_sound(table, rows, n, d, a, params):
    if a == 0 or not _gotzmann_rows(table, rows, n, a):
        return 0, []
    V = table.subset(rows)
    try:
        cert = build_certificate(V)
    except PersistenceInconsistencyError as err:
        return 1, [(str(err).splitlines()[0], V)]
    ok, path = diagnose_certificate(cert, V)
    if not ok:
        return 1, [('certificate rejected at %s' % path, V)]
    return 1, []


def _check_gcd_shift(table, rows, n, d, a, params):
    V = table.subset(rows)
    gotzmann = is_gotzmann(V)
    size = len(shadow(V))
    found = []
    for j in range(1, n + 1):
        shifted = multiply_by_variable(V, j)
        if is_gotzmann(shifted) != gotzmann or len(shadow(shifted)) != size:
            found.append(('x%d V changes the Gotzmann property or |MV|' % j, V))
    return n, found


_set_checks = {
    'macaulay_1': _check_macaulay,
    'persistence': _check_persistence,
    'L2_1': _check_split_bound,
    'L2_2': _check_dropped_range,
    'L2_3': _check_certificate_sound,
    'claim_sharp': _check_claim_sharp,
    'gcd_shift': _check_gcd_shift,
}


def _rank_chunks(total, parts):
    """[start, stop) ranges covering range(total) in order."""
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    chunks = []
    start = 0
    for k in range(parts):
        stop = start + step + (1 if k < extra else 0)
        chunks.append((start, stop))
        start = stop
    return chunks


def _run_set_task(task):
    """One (n, d, a, rank range) slice of a set suite; runs in a worker."""
    lemma_id, n, d, a, start, stop, params = task
    check = _set_checks[lemma_id]
    table = ShadowTable(n, d)
    size = count_monomials(n, d)
    report = LemmaReport(lemma_id, params)

    if start is None:
        # sampled cell: stop is the number of draws
        rng = np.random.default_rng([params['seed'], n, d, a])
        rows_iter = (tuple(sorted(rng.choice(size, a, replace=False).tolist()))
                     for _ in range(stop))
    else:
        rows_iter = iter_subset_rows(size, a, start, stop)

    for rows in rows_iter:
        cases, found = check(table, np.asarray(rows, dtype=np.int64), n, d, a, params)
        report.cases += cases
        for detail, V in found:
            report.add(_case_text(n, d, a), detail, V)
    return report


def _set_tasks(lemma_id, params, budget, parallel):
    tasks = []
    for n, d in params['cells']:
        if n < 1 or d < 0:
            raise ValueError('cell (n=%d, d=%d) needs n >= 1 and d >= 0' % (n, d))
        for a in range(count_monomials(n, d) + 1):
            try:
                _, total = check_cell(n, d, a, budget)
            except BudgetExceededError:
                if not params.get('sampled'):
                    raise
                tasks.append((lemma_id, n, d, a, None, params['samples'], params))
                continue
            for start, stop in _rank_chunks(total, parallel):
                tasks.append((lemma_id, n, d, a, start, stop, params))
    return tasks


def _run_set_suite(lemma_id, params, budget, parallel):
    tasks = _set_tasks(lemma_id, params, budget, parallel)
    if parallel > 1:
        with ProcessPoolExecutor(max_workers=parallel) as executor:
            parts = list(executor.map(_run_set_task, tasks))
    else:
        parts = [_run_set_task(task) for task in tasks]
    return merge_reports([LemmaReport(lemma_id, params)] + parts)


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

_numeric_suites = {
    'L1_2': _suite_rep_order,
    'L1_3': _suite_telescoping,
    'L1_4': _suite_up_down,
    'L1_5': _suite_superadditive,
    'L1_6': _suite_three_term,
    'L1_7': _suite_order_step,
    'lex_tight': _suite_lex_tight,
}

suite_ids = ('L1_2', 'L1_3', 'L1_4', 'L1_5', 'L1_6', 'L1_7', 'L2_1', 'L2_2',
             'L2_3', 'claim_sharp', 'macaulay_1', 'persistence', 'lex_tight',
             'gcd_shift')


def suite_params(lemma_id, ranges=None, seed=None):
    """Configured defaults for lemma_id updated with ranges."""
    if lemma_id not in suite_ids:
        raise ValueError('unknown lemma suite %r; choose from %s' % (lemma_id, ', '.join(suite_ids)))
    params = dict(cfg.suite_defaults[lemma_id])
    ranges = dict(ranges or {})

    if 'n' in ranges or 'd' in ranges:
        if lemma_id in _numeric_suites:
            raise ValueError('suite %s takes no single cell' % lemma_id)
        if 'n' not in ranges or 'd' not in ranges:
            raise ValueError('a single cell needs both n and d')
        ranges['cells'] = ((int(ranges.pop('n')), int(ranges.pop('d'))),)

    for key, value in ranges.items():
        if value is None:
            continue
        params[key] = tuple(tuple(c) for c in value) if key == 'cells' else value

    if lemma_id == 'L1_6':
        params.setdefault('exhaustive_max_n', cfg.l16_exhaustive_max_n)
        params.setdefault('exhaustive_max_alpha', cfg.l16_exhaustive_max_alpha)
        params.setdefault('sampled_max_n', cfg.l16_sampled_max_n)
        params.setdefault('sampled_max_alpha', cfg.l16_sampled_max_alpha)
    if lemma_id == 'L1_6' or params.get('sampled'):
        params['seed'] = cfg.resolve_seed(seed)
        params.setdefault('samples', cfg.default_samples)

    for key in ('max_h', 'max_n', 'max_a', 'max_d', 'steps', 'samples'):
        if key in params and int(params[key]) < (0 if key in ('samples', 'max_d') else 1):
            raise ValueError('range %s=%s is out of bounds' % (key, params[key]))
    return params


def run_lemma_suite(lemma_id, ranges=None, budget=None, seed=None, parallel=1, verbose=False):
    """
    Run one suite and return its LemmaReport.

    Input:
        lemma_id = one of suite_ids
        ranges = dict overriding the configured range, e.g. {'max_a': 100}
                 or {'n': 3, 'd': 2} for a single set cell
        budget = subset cap per (n, d, a) cell (config default if None)
        seed = seed of the sampled parts (config default if None)
        parallel = worker processes for set suites
    Output:
        LemmaReport

    Raises BudgetExceededError when a set cell is above the budget.
    """
    params = suite_params(lemma_id, ranges, seed)
    parallel = max(1, int(parallel))

    if verbose:
        print('running %s with %s' % (lemma_id, ' '.join('%s=%s' % (k, _param_text(v))
                                                          for k, v in params.items())))

    if lemma_id in _numeric_suites:
        return _numeric_suites[lemma_id](params)

    if parallel > 1 and not HAS_NUMBA:
        warnings.warn('numba is not installed; shadow counts run in pure Python')
    return _run_set_suite(lemma_id, params, budget, parallel)


__all__ = ['LemmaReport', 'merge_reports', 'suite_ids', 'suite_params', 'run_lemma_suite']
