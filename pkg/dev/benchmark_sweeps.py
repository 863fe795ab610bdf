#!/usr/bin/env python
"""
Benchmark the exhaustive set suites sequentially and with worker processes.
The first sequential run includes numba compilation of the shadow kernel.
"""

import numpy as np
import time
import sys
import os

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from gotzprop.macaulay.lemma_suites import run_lemma_suite
from gotzprop.macaulay.numba_compat import HAS_NUMBA

# (suite, single cell)
test_cases = [
    ('macaulay_1', {'n': 3, 'd': 3}),
    ('L2_1', {'n': 3, 'd': 2}),
    ('L2_3', {'n': 4, 'd': 2}),
    ('persistence', {'n': 2, 'd': 4}),
]
workers = (2, 4)

print("=" * 80)
print("BENCHMARK: set suites, numba=%s" % HAS_NUMBA)
print("=" * 80)
print()

print("FIRST CALL (includes JIT compilation)...")
t0 = time.time()
report = run_lemma_suite(*test_cases[0])
first_call_time = time.time() - t0
print(f"  Time: {first_call_time:.4f}s  {report!r}")
print()

rows = []
for lemma_id, cell in test_cases:
    t0 = time.time()
    sequential = run_lemma_suite(lemma_id, cell)
    elapsed = [time.time() - t0]
    for k in workers:
        t0 = time.time()
        parallel = run_lemma_suite(lemma_id, cell, parallel=k)
        elapsed.append(time.time() - t0)
        if parallel.to_text() != sequential.to_text():
            print(f"  MISMATCH {lemma_id} {cell} with {k} workers")
    rows.append((lemma_id, cell, sequential.cases, elapsed))
    print(f"  {lemma_id:12s} n={cell['n']} d={cell['d']}  cases={sequential.cases:8d}  "
          + "  ".join(f"{t:.3f}s" for t in elapsed))

print()
print("=" * 80)
print("SUMMARY")
print("=" * 80)
times = np.array([r[3] for r in rows])
print("workers:        1  " + "  ".join(f"{k:>6d}" for k in workers))
print("total time: " + "  ".join(f"{t:6.3f}" for t in times.sum(axis=0)))
print("speedup:    " + "  ".join(f"{t:6.2f}" for t in times.sum(axis=0)[0] / times.sum(axis=0)))
