#!/usr/bin/env python

# gotzprop v1.0 Oct 2026

try:
    import importlib.resources as pkg_resources
except ImportError:
    # Try backported to PY<37 `importlib_resources`.
    import importlib_resources as pkg_resources

import argparse
import json
import os
import sys
import warnings

from gotzprop import macaulay
import gotzprop.macaulay.config_macaulay as cfg
from gotzprop.macaulay.binomial_core import (
    ddown, down, macaulay_rep, remainder, rep_terms_text, up,
)
from gotzprop.macaulay.certificate import (
    build_certificate, certificate_depth, certificate_leaves, diagnose_certificate,
    format_machine, format_tree,
)
from gotzprop.macaulay.gotzmann_engine import (
    BudgetExceededError, NotGotzmannError, PersistenceInconsistencyError,
    is_gotzmann, macaulay_bound, persistence_chains,
)
from gotzprop.macaulay.lemma_suites import run_lemma_suite, suite_ids
from gotzprop.macaulay.monomial_algebra import lexsegment, shadow, split
from gotzprop.macaulay.monomial_io import format_monomial, format_set, read_set

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _warning(message, category=UserWarning, filename='', lineno=-1, file=None, line=None):
    print('Warning: ', message, file=sys.stderr)


def _emit(args, plain, payload):
    """Print plain text or its json mirror."""
    if args.format == 'json':
        print(json.dumps(payload))
    else:
        sys.stdout.write(plain if plain.endswith('\n') else plain + '\n')


# ----------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------

def cmd_rep(args):
    rep = macaulay_rep(args.h, args.n)
    plain = '%s = %d' % (rep_terms_text(rep), rep.value)
    payload = {'h': args.h, 'n': args.n,
               'terms': [[t.top, t.bottom] for t in rep.terms], 'value': rep.value}
    _emit(args, plain, payload)
    return EXIT_OK


_operators = {'up': up, 'down': down, 'ddown': ddown}


def cmd_op(args):
    if args.op == 'rem':
        alpha, rem = remainder(args.h, args.n)
        _emit(args, 'alpha=%d rem=%d' % (alpha, rem),
              {'op': 'rem', 'h': args.h, 'n': args.n, 'alpha': alpha, 'rem': rem})
        return EXIT_OK

    value = _operators[args.op](args.h, args.n)
    _emit(args, '%d' % value, {'op': args.op, 'h': args.h, 'n': args.n, 'value': value})
    return EXIT_OK


def _set_payload(V):
    return {'n': V.n_vars, 'd': V.degree, 'members': [format_monomial(m) for m in V.members]}


def _gotzmann_counts(V):
    return len(shadow(V)), macaulay_bound(V)


def cmd_set(args):
    action = args.action

    if action == 'lex':
        if len(args.operands) != 3:
            raise ValueError('set lex needs n d a')
        n, d, a = (int(x) for x in args.operands)
        V = lexsegment(n, d, a)
        _emit(args, format_set(V), _set_payload(V))
        return EXIT_OK

    if len(args.operands) != 1:
        raise ValueError('set %s needs one monomial-set file' % action)
    path = args.operands[0]
    V = read_set(path)

    if action == 'shadow':
        MV = shadow(V)
        _emit(args, format_set(MV), _set_payload(MV))
        return EXIT_OK

    if action == 'gotzmann':
        size, bound = _gotzmann_counts(V)
        ok = size == bound
        plain = '|MV|=%d up(%d,%d)=%d\n%s' % (
            size, len(V), V.n_vars - 1, bound, 'PASS' if ok else 'FAIL (%d ≠ %d)' % (size, bound))
        _emit(args, plain, {'shadow': size, 'bound': bound, 'gotzmann': ok})
        return EXIT_OK if ok else EXIT_FAIL

    if action == 'split':
        if args.index is None:
            raise ValueError('set split needs --index i')
        result = split(V, args.index)
        plain = ('index=%d gcd=%s kept=%d dropped=%d\n# kept\n%s# dropped\n%s'
                 % (result.index, format_monomial(result.gcd), len(result.kept),
                    len(result.dropped), format_set(result.kept), format_set(result.dropped)))
        _emit(args, plain, {'index': result.index, 'gcd': format_monomial(result.gcd),
                            'kept': _set_payload(result.kept),
                            'dropped': _set_payload(result.dropped)})
        return EXIT_OK

    if not is_gotzmann(V):
        size, bound = _gotzmann_counts(V)
        _emit(args, 'not Gotzmann\nFAIL (%d ≠ %d)' % (size, bound),
              {'shadow': size, 'bound': bound, 'gotzmann': False})
        return EXIT_FAIL

    if action == 'persist':
        steps = cfg.default_steps if args.steps is None else args.steps
        sizes, bounds, ok = persistence_chains(V, steps)
        plain = ' '.join(str(s) for s in sizes) + '\n'
        if not ok:
            plain += 'bound ' + ' '.join(str(s) for s in bounds) + '\n'
        plain += 'PASS' if ok else 'FAIL'
        _emit(args, plain, {'chain': sizes, 'bound': bounds, 'persistent': ok})
        if args.plot:
            if args.format == 'json':
                warnings.warn('plot requested with json output; plot is still written')
            from gotzprop.macaulay.growth_plots import plot_growth_chain
            plot_growth_chain(sizes, bounds, V.n_vars, label=os.path.basename(path))
        return EXIT_OK if ok else EXIT_FAIL

    # certify; the empty set persists trivially and has no certificate tree
    if len(V) == 0:
        _emit(args, 'empty set\nPASS', {'certificate': None, 'depth': 0, 'leaves': 0,
                                         'valid': True, 'diagnostic': 'empty set'})
        return EXIT_OK
    cert = build_certificate(V)
    ok, where = diagnose_certificate(cert, V)
    text = format_machine(cert) if args.machine else format_tree(cert)
    plain = text + ('PASS' if ok else 'FAIL %s' % where)
    _emit(args, plain, {'certificate': text, 'depth': certificate_depth(cert),
                        'leaves': len(certificate_leaves(cert)), 'valid': ok,
                        'diagnostic': where})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_lemma(args):
    if args.list:
        _emit(args, '\n'.join(suite_ids), {'suites': list(suite_ids)})
        return EXIT_OK
    if args.lemma_id is None:
        raise ValueError('lemma needs a suite id; use --list to see them')

    ranges = {
        'max_h': args.max_h, 'max_n': args.max_n, 'max_a': args.max_a,
        'max_d': args.max_d, 'samples': args.samples,
    }
    if args.n is not None or args.d is not None:
        ranges['n'] = args.n
        ranges['d'] = args.d
    if args.lemma_id == 'persistence':
        ranges['steps'] = args.steps
    if args.witness:
        ranges['witness'] = True
    if args.sampled:
        ranges['sampled'] = True
    ranges = {k: v for k, v in ranges.items() if v is not None}

    report = run_lemma_suite(args.lemma_id, ranges, budget=args.budget,
                             seed=args.seed, parallel=args.parallel, verbose=args.verbose)
    _emit(args, report.to_text(), report.to_dict())
    return EXIT_OK if report.passed else EXIT_FAIL


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------

def _common_flags():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=('plain', 'json'), default='plain',
        help='Output format')
    common.add_argument('--budget', type=int, default=None,
        help='Maximum number of subsets per (n, d, a) cell (lemma only)')
    common.add_argument('--seed', type=int, default=None,
        help='Seed for sampled suites (lemma only)')
    return common


def _add_steps(p):
    p.add_argument('--steps', type=int, default=None,
        help='Number of shadow steps for persistence checks')


def build_parser():
    common = _common_flags()
    parser = argparse.ArgumentParser(
        description='gotzprop v1.0 Oct 2026: Macaulay representations and Gotzmann persistence')
    parser.add_argument('-e', '--explain', action='store_true',
        help='Print an explanation of the code and exit')
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    p = commands.add_parser('rep', parents=[common], help='nth binomial representation of h')
    p.add_argument('h', type=int)
    p.add_argument('n', type=int)
    p.set_defaults(func=cmd_rep)

    p = commands.add_parser('op', parents=[common], help='up, down, ddown or rem of h')
    p.add_argument('op', choices=('up', 'down', 'ddown', 'rem'))
    p.add_argument('h', type=int)
    p.add_argument('n', type=int)
    p.set_defaults(func=cmd_op)

    p = commands.add_parser('set', parents=[common], help='monomial-set actions')
    p.add_argument('action', choices=('shadow', 'lex', 'gotzmann', 'persist', 'certify', 'split'))
    p.add_argument('operands', nargs='+', help='monomial-set file, or n d a for lex')
    p.add_argument('-i', '--index', type=int, default=None, help='variable index for split')
    p.add_argument('--machine', action='store_true', help='machine certificate format')
    p.add_argument('-p', '--plot', action='store_true',
        help='Plot the shadow-size chain into output_gotzprop/')
    _add_steps(p)
    p.set_defaults(func=cmd_set)

    p = commands.add_parser('lemma', parents=[common], help='run a lemma suite')
    p.add_argument('lemma_id', nargs='?', default=None)
    p.add_argument('--list', action='store_true', help='list suite ids')
    p.add_argument('--max-h', dest='max_h', type=int, default=None)
    p.add_argument('--max-n', dest='max_n', type=int, default=None)
    p.add_argument('--max-a', dest='max_a', type=int, default=None)
    p.add_argument('--max-d', dest='max_d', type=int, default=None)
    p.add_argument('--n', dest='n', type=int, default=None, help='single cell: variables')
    p.add_argument('--d', dest='d', type=int, default=None, help='single cell: degree')
    p.add_argument('--witness', action='store_true', help='L1_5: also check lexsegment witnesses')
    p.add_argument('--sampled', action='store_true',
        help='sample subsets of cells above the budget instead of failing')
    _add_steps(p)
    p.add_argument('--parallel', type=int, default=1,
        help='Worker processes for set enumeration')
    p.add_argument('--samples', type=int, default=None,
        help='Number of random samples for sampled suites')
    p.add_argument('-v', '--verbose', action='store_true',
        help='Verbose output')
    p.set_defaults(func=cmd_lemma)

    return parser


def explain():
    try:
        inp_file = (pkg_resources.files(macaulay) / 'README.txt')
        with inp_file.open('rt') as f:
            print(f.read())
    except AttributeError:
        print(pkg_resources.read_text(macaulay, 'README.txt'))


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)

    # If 'explain' option is set, print out README file and exit.
    if '-e' in argv or '--explain' in argv:
        explain()
        return EXIT_OK

    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        if exc.code not in (0, None):
            print('Use gotzprop -e to get explanation of code', file=sys.stderr)
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK

    original_showwarning = warnings.showwarning
    warnings.showwarning = _warning
    previous_budget = previous_seed = None
    try:
        if args.command != 'lemma':
            for flag, value in (('--budget', args.budget), ('--seed', args.seed)):
                if value is not None:
                    warnings.warn('%s has no effect on %s' % (flag, args.command))
        if args.budget is not None:
            previous_budget = cfg.set_budget(args.budget)
        if args.seed is not None:
            previous_seed = cfg.set_seed(args.seed)
        steps = getattr(args, 'steps', None)
        if steps is not None and steps < 1:
            raise ValueError('--steps must be >= 1, got %d' % steps)
        return args.func(args)
    except (NotGotzmannError, PersistenceInconsistencyError) as err:
        print('FAIL: %s' % err, file=sys.stderr)
        return EXIT_FAIL
    except (ValueError, OSError, BudgetExceededError) as err:
        print('error: %s' % err, file=sys.stderr)
        return EXIT_USAGE
    finally:
        if previous_budget is not None:
            cfg.set_budget(previous_budget)
        if previous_seed is not None:
            cfg.set_seed(previous_seed)
        warnings.showwarning = original_showwarning


if __name__ == '__main__':
    sys.exit(main())
