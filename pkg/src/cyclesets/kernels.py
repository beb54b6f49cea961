"""Selects the compiled kernels when available, else the pure-Python ones.

Set ``CYCLESETS_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels as python_kernels

compiled_kernels = None
if os.environ.get("CYCLESETS_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled_kernels
    except ImportError:
        compiled_kernels = None

active = compiled_kernels if compiled_kernels is not None else python_kernels
BACKEND = active.BACKEND

closure = active.closure
first_c1_violation = active.first_c1_violation
search_tables = active.search_tables
canonical_search = active.canonical_search
