import os
import subprocess
import sys

import numpy as np
import pytest

from cyclesets import _pykernels, kernels
from cyclesets.classify import build_pq
from cyclesets.core import inverse
from cyclesets.oracle import _canonical_inputs, row0_representatives

compiled = kernels.compiled_kernels
needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")


def _gens(x):
    return np.array([inverse(r) for r in sorted(set(x.table))], dtype=np.uint8)


def test_backend_name():
    assert kernels.BACKEND in ("python", "cython")


@needs_compiled
def test_closure_agrees():
    g = _gens(build_pq(2, 3, (0, 1)))
    a, _, _, done_a = _pykernels.closure(g, 10 ** 6)
    b, _, _, done_b = compiled.closure(g, 10 ** 6)
    assert done_a and done_b
    assert np.asarray(a).shape == np.asarray(b).shape == (18, 6)
    assert sorted(map(tuple, np.asarray(a))) == sorted(map(tuple, np.asarray(b)))


@needs_compiled
def test_closure_cutoff():
    g = _gens(build_pq(2, 3, (0, 1)))
    for k in (_pykernels, compiled):
        rows, _, _, done = k.closure(g, 5)
        assert not done and len(rows) == 5


@needs_compiled
def test_c1_agrees():
    bad = np.array([[0, 1], [1, 0]], dtype=np.int64)
    good = build_pq(2, 3, (0, 1)).array
    for k in (_pykernels, compiled):
        assert k.first_c1_violation(bad) == (0, 1, 0)
        assert k.first_c1_violation(good) is None


@needs_compiled
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_search_agrees(n):
    a, _ = _pykernels.search_tables(n, None, False)
    b, _ = compiled.search_tables(n, None, False)
    assert sorted(a) == sorted(b)
    a, _ = _pykernels.search_tables(n, row0_representatives(n), True)
    b, _ = compiled.search_tables(n, row0_representatives(n), True)
    assert sorted(a) == sorted(b)


@needs_compiled
def test_canonical_agrees():
    x = build_pq(2, 3, (0, 1))
    args = _canonical_inputs(x.table)
    assert _pykernels.canonical_search(x.table, *args) == compiled.canonical_search(x.table, *args)


def test_pure_python_fallback_env():
    env = dict(os.environ, CYCLESETS_PURE_PYTHON="1")
    code = ("from cyclesets import kernels, oracle; "
            "print(kernels.BACKEND, len(oracle.enumerate_all(3)), len(oracle.enumerate_all(4, upto_iso=True)))")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "12", "23"]
