"""
Pytest configuration and fixtures for gotzprop tests
"""
import pytest
import os
import sys

# Force non-interactive matplotlib backend for tests
os.environ.setdefault("MPLBACKEND", "Agg")
import matplotlib
matplotlib.use("Agg")

# Add src to path so we can import gotzprop modules
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), 'golden')


@pytest.fixture
def output_dir(tmp_path, monkeypatch):
    """
    Run the test from a temporary working directory so that
    output_gotzprop/ is created there
    """
    monkeypatch.chdir(tmp_path)
    return tmp_path / 'output_gotzprop'


@pytest.fixture(autouse=True)
def restore_config():
    """
    Undo set_budget / set_seed calls made by a test
    """
    from gotzprop.macaulay import config_macaulay
    budget = config_macaulay.subset_budget
    seed = config_macaulay.default_seed
    yield
    config_macaulay.subset_budget = budget
    config_macaulay.default_seed = seed


@pytest.fixture
def lex_file(tmp_path):
    """Monomial-set file holding Lex(3,2,5)"""
    path = tmp_path / 'lex.ms'
    path.write_text('n=3 d=2\nx1^2\nx1*x2\nx1*x3\nx2^2\nx2*x3\n')
    return str(path)


@pytest.fixture
def golden():
    """Reader for expected CLI output under tests/golden/"""
    def read(name):
        with open(os.path.join(GOLDEN_DIR, name), 'r', encoding='utf-8') as f:
            return f.read()
    return read
