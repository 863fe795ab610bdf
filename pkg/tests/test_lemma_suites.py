"""
Tests for the lemma suites and their reports
"""
import pytest

from gotzprop.macaulay import config_macaulay as cfg
from gotzprop.macaulay.gotzmann_engine import BudgetExceededError
from gotzprop.macaulay.lemma_suites import (
    LemmaReport, merge_reports, run_lemma_suite, suite_ids, suite_params,
)
from gotzprop.macaulay.monomial_algebra import lexsegment


@pytest.mark.parametrize("lemma_id,ranges,cases", [
    ('L1_2', {'max_h': 200, 'max_n': 4}, 800),
    ('L1_3', {'max_h': 10, 'max_n': 3}, 165),
    ('L1_4', {'max_h': 300, 'max_n': 5}, 1500),
    ('L1_5', {'max_a': 100, 'max_n': 4}, 40000),
    ('L1_7', {'max_h': 200, 'max_n': 4}, 800),
])
def test_numeric_suites_pass(lemma_id, ranges, cases):
    report = run_lemma_suite(lemma_id, ranges)
    assert report.passed, report.to_text()
    assert report.cases == cases


def test_superadditivity_witness():
    report = run_lemma_suite('L1_5', {'max_a': 3, 'max_n': 1, 'witness': True})
    assert report.passed, report.to_text()
    assert report.cases == 9 + 9


def test_lex_tight_suite():
    report = run_lemma_suite('lex_tight', {'max_n': 3, 'max_d': 3})
    assert report.passed, report.to_text()
    # sum over n <= 3, d <= 3 of |M^d| + 1
    assert report.cases == (2 * 4) + (2 + 3 + 4 + 5) + (2 + 4 + 7 + 11)


def test_three_term_suite_is_seeded():
    small = {'exhaustive_max_n': 2, 'exhaustive_max_alpha': 3, 'samples': 200}
    first = run_lemma_suite('L1_6', small, seed=7)
    second = run_lemma_suite('L1_6', small, seed=7)
    assert first.passed, first.to_text()
    assert first.to_text() == second.to_text()
    assert first.cases == second.cases
    assert first.params['seed'] == 7


def test_three_term_suite_uses_configured_seed():
    cfg.set_seed(11)
    params = suite_params('L1_6', {'samples': 5})
    assert params['seed'] == 11
    assert params['exhaustive_max_n'] == cfg.l16_exhaustive_max_n


def test_macaulay_single_cell():
    report = run_lemma_suite('macaulay_1', {'n': 3, 'd': 2})
    assert report.passed
    assert report.cases == 64
    assert report.to_text() == 'lemma=macaulay_1 cells=(3,2)\ncases=64 violations=0\n'


@pytest.mark.parametrize("lemma_id", ['persistence', 'L2_1', 'L2_2', 'L2_3',
                                      'claim_sharp', 'gcd_shift'])
def test_set_suites_pass_on_small_cells(lemma_id):
    for n, d in ((2, 2), (3, 2), (4, 1)):
        report = run_lemma_suite(lemma_id, {'n': n, 'd': d})
        assert report.passed, report.to_text()
        assert report.cases > 0


@pytest.mark.filterwarnings("ignore:numba is not installed")
def test_parallel_report_matches_sequential():
    sequential = run_lemma_suite('L2_3', {'n': 3, 'd': 2})
    parallel = run_lemma_suite('L2_3', {'n': 3, 'd': 2}, parallel=2)
    assert parallel.to_text() == sequential.to_text()
    assert parallel.to_dict() == sequential.to_dict()


def test_budget_exceeded():
    with pytest.raises(BudgetExceededError):
        run_lemma_suite('macaulay_1', {'n': 3, 'd': 3}, budget=100)


def test_sampled_cells_above_budget():
    """Cells above the budget are sampled when asked to"""
    ranges = {'n': 3, 'd': 3, 'sampled': True, 'samples': 20}
    report = run_lemma_suite('macaulay_1', ranges, budget=100, seed=3)
    assert report.passed
    # a = 3..7 are sampled, the rest enumerated
    assert report.cases == 1 + 10 + 45 + 5 * 20 + 45 + 10 + 1
    again = run_lemma_suite('macaulay_1', ranges, budget=100, seed=3)
    assert again.to_text() == report.to_text()


@pytest.mark.parametrize("lemma_id,ranges", [
    ('L9_9', None),
    ('L1_4', {'n': 3, 'd': 2}),
    ('macaulay_1', {'n': 3}),
    ('L1_4', {'max_h': 0}),
])
def test_bad_suite_requests(lemma_id, ranges):
    with pytest.raises(ValueError):
        run_lemma_suite(lemma_id, ranges)


def test_report_add_and_merge():
    first = LemmaReport('macaulay_1', {'cells': ((3, 2),)}, cases=4)
    second = LemmaReport('macaulay_1', {'cells': ((3, 2),)}, cases=6)
    second.add('n=3 d=2 a=5', '|MV| too small', lexsegment(3, 2, 5))
    assert first.passed and not second.passed

    merged = merge_reports([first, second])
    assert merged.cases == 10
    assert len(merged.violations) == 1
    text = merged.to_text()
    assert 'cases=10 violations=1' in text
    assert 'violation n=3 d=2 a=5: |MV| too small' in text
    assert '  x1*x3' in text
    assert merged.to_dict()['range'] == {'cells': [[3, 2]]}

    with pytest.raises(ValueError):
        first.merge(LemmaReport('L2_1', {}))


def test_suite_ids_have_defaults():
    for lemma_id in suite_ids:
        assert lemma_id in cfg.suite_defaults


@pytest.mark.slow
@pytest.mark.parametrize("lemma_id", suite_ids)
def test_default_ranges_pass(lemma_id):
    report = run_lemma_suite(lemma_id)
    assert report.passed, report.to_text()
