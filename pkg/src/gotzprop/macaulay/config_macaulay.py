# gotzprop.macaulay v1.0 Oct 2026

'''
Configuration for the gotzprop sweeps

Holds the defaults shared by the engine, the lemma suites and the CLI:
enumeration budget, sampling seed, persistence steps and the parameter
ranges swept by each suite.  Values are module globals; use
set_budget/set_seed to change them so that dependent modules see the
update.
'''

import os
import warnings

script_path = os.path.dirname(os.path.realpath(__file__))

# Maximum number of subsets enumerated per (n, d, a) cell
subset_budget_default = 2**20
subset_budget = subset_budget_default

# Seed for sampled suites (L1_6 beyond the exhaustive frontier)
default_seed = 0

# Number of shadow iterations checked by verify_persistence
default_steps = 5

# Number of random samples drawn by sampled suites
default_samples = 10**4

# L1_6: exhaustive for n <= 3 and alpha <= 6, sampled beyond
l16_exhaustive_max_n = 3
l16_exhaustive_max_alpha = 6
l16_sampled_max_n = 6
l16_sampled_max_alpha = 6

# Output directory for plots, created in the user's working directory
output_dirname = 'output_gotzprop'

# ---------------------------------------------------------------------
# Default parameter ranges for each suite.
# Numeric suites use max_h / max_n / max_a; set suites use cells (n, d).
# ---------------------------------------------------------------------

# (n, d) cells of the exhaustive set sweep; every cell has |M^d| <= 10
desk_cells = (
    (1, 0), (1, 1), (1, 2), (1, 3),
    (2, 0), (2, 1), (2, 2), (2, 3), (2, 4),
    (3, 0), (3, 1), (3, 2), (3, 3),
    (4, 0), (4, 1), (4, 2),
)

suite_defaults = {
    'L1_2':        {'max_h': 10**4, 'max_n': 8},
    'L1_3':        {'max_h': 50, 'max_n': 6},
    'L1_4':        {'max_h': 10**4, 'max_n': 8},
    'L1_5':        {'max_a': 500, 'max_n': 6},
    'L1_6':        {'samples': default_samples},
    'L1_7':        {'max_h': 10**4, 'max_n': 7},
    'L2_1':        {'cells': desk_cells},
    'L2_2':        {'cells': desk_cells},
    'L2_3':        {'cells': desk_cells},
    'claim_sharp': {'cells': desk_cells},
    'macaulay_1':  {'cells': desk_cells},
    'persistence': {'cells': desk_cells, 'steps': default_steps},
    'lex_tight':   {'max_n': 4, 'max_d': 4},
    'gcd_shift':   {'cells': ((2, 2), (3, 1), (3, 2))},
}


def set_budget(budget):
    """Set the subset budget; returns the previous value.

    A budget above the default cap is allowed but warned about, since the
    exhaustive sweeps then no longer finish in seconds.
    """
    global subset_budget

    budget = int(budget)
    if budget <= 0:
        raise ValueError('Subset budget must be positive, got %d' % budget)
    if budget > subset_budget_default:
        warnings.warn('subset budget %d exceeds the default cap %d'
                      % (budget, subset_budget_default))

    previous = subset_budget
    subset_budget = budget
    return previous


def set_seed(seed):
    """Set the seed used by sampled suites; returns the previous value."""
    global default_seed

    previous = default_seed
    default_seed = int(seed)
    return previous


def resolve_budget(budget=None):
    """Budget argument or the configured default."""
    return subset_budget if budget is None else int(budget)


def resolve_seed(seed=None):
    """Seed argument or the configured default."""
    return default_seed if seed is None else int(seed)
