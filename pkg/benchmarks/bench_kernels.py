"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--full]

--full adds the size-6 indecomposable search (about two minutes in Python).
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from cyclesets import _pykernels, kernels
from cyclesets.classify import build_pq, build_pqr_case1
from cyclesets.core import inverse
from cyclesets.oracle import _canonical_inputs, row0_representatives


def _cases(full: bool):
    x30 = build_pqr_case1(2, 3, 5, (0, 1), (0, 1, 0), (0,))
    gens30 = np.array([inverse(r) for r in sorted(set(x30.table))], dtype=np.uint8)
    x6 = build_pq(2, 3, (0, 1))
    return [
        ("closure |G|=281250", lambda k: k.closure(gens30, 10 ** 6)),
        ("first_c1_violation n=30", lambda k: k.first_c1_violation(x30.array)),
        ("search_tables n=5", lambda k: k.search_tables(5, None, False)),
        ("canonical_search n=6", lambda k: k.canonical_search(x6.table, *_canonical_inputs(x6.table))),
    ] + ([("search_tables n=6 indecomposable", lambda k: k.search_tables(6, row0_representatives(6), True))]
         if full else [])


def _best(fn, backend, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn(backend)
        times.append(time.perf_counter() - t)
    return min(times)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--full", action="store_true")
    args = ap.parse_args()
    compiled = kernels.compiled_kernels
    print(f"{'kernel':36s} {'python s':>10s} {'compiled s':>11s} {'speedup':>8s}")
    for name, fn in _cases(args.full):
        py = _best(fn, _pykernels, 1 if "n=6" in name or "closure" in name else args.repeat)
        if compiled is None:
            print(f"{name:36s} {py:10.4f} {'n/a':>11s} {'n/a':>8s}")
            continue
        c = _best(fn, compiled, args.repeat)
        print(f"{name:36s} {py:10.4f} {c:11.4f} {py / c:8.1f}")


if __name__ == "__main__":
    main()
