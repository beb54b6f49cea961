"""Brute-force ground truth: exhaustive enumeration and canonical forms."""
from __future__ import annotations

import itertools
import random
from typing import Sequence

from . import kernels
from .core import CycleSet, cycles, inverse, validate_cycle_set
from .report import Report

DEFAULT_LIMIT = 5
DEFAULT_INDECOMPOSABLE_LIMIT = 6


class LimitExceeded(RuntimeError):
    pass


class MismatchFound(AssertionError):
    def __init__(self, report: Report):
        self.report = report
        super().__init__(f"classification and oracle disagree: {report.witnesses}")


# ---------------------------------------------------------------- canonical form

def _row0_pattern(lengths_first: int, rest: Sequence[int]) -> tuple[int, ...]:
    out = []
    start = 0
    for length in (lengths_first, *rest):
        out.extend(range(start + 1, start + length))
        out.append(start)
        start += length
    return tuple(out)


def _canonical_inputs(table):
    """Start elements with the least row-0 pattern, and their cycle layouts."""
    n = len(table)
    patterns = [_pattern(table, e) for e in range(n)]
    least = min(patterns)
    starts, seqs, others = [], [], []
    for e in range(n):
        if patterns[e] != least:
            continue
        sig = table[e]
        seq = [e]
        while sig[seq[-1]] != e:
            seq.append(sig[seq[-1]])
        rest = []
        for c in cycles(sig):
            if e in c:
                continue
            path = [c[0]]
            while sig[path[-1]] != c[0]:
                path.append(sig[path[-1]])
            rest.append(path)
        rest.sort(key=len)
        starts.append(e)
        seqs.append(seq)
        others.append(rest)
    return starts, seqs, others


def canonical_form(x: CycleSet) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least table over all relabelings of x.

    Row 0 of a relabeled table only depends on the cycle structure of the
    element labelled 0, so that element is restricted to those giving the
    least row 0; the rest is a branch-and-bound search in the kernels.
    """
    return _canonical_table(x.table)


def _canonical_table(table) -> tuple[tuple[int, ...], ...]:
    n = len(table)
    if n == 0:
        return ()
    flat = kernels.canonical_search(table, *_canonical_inputs(table))
    return tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))


def canonical_cycle_set(x: CycleSet) -> CycleSet:
    return CycleSet(canonical_form(x))


# ---------------------------------------------------------------- enumeration

def row0_representatives(n: int) -> list[tuple[int, ...]]:
    """One permutation per (cycle type, length of the cycle through 0)."""
    reps = []
    for parts in _partitions(n):
        for first in sorted(set(parts)):
            rest = list(parts)
            rest.remove(first)
            perm = [0] * n
            start = 0
            for length in [first, *sorted(rest)]:
                for k in range(length):
                    perm[start + k] = start + (k + 1) % length
                start += length
            reps.append(tuple(perm))
    return reps


def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k, *rest)


def _pattern(table, e: int) -> tuple[int, ...]:
    cyc = cycles(table[e])
    own = next(c for c in cyc if e in c)
    return _row0_pattern(len(own), sorted(len(c) for c in cyc if c is not own))


def _zero_is_minimal(table) -> bool:
    """True when element 0 already gives the least possible row 0.

    The canonical form always starts from such an element, so every class
    keeps at least one representative passing this filter.
    """
    p0 = _pattern(table, 0)
    return all(_pattern(table, e) >= p0 for e in range(1, len(table)))


def _iso_classes(n: int, indecomposable: bool) -> list[CycleSet]:
    tables, _ = kernels.search_tables(n, row0_representatives(n), indecomposable)
    forms = {_canonical_table(t) for t in tables if _zero_is_minimal(t)}
    return [CycleSet(f) for f in sorted(forms)]


def enumerate_all(n: int, indecomposable: bool = False, upto_iso: bool = False,
                  limit: int | None = None) -> list[CycleSet]:
    """Every cycle set on {0..n-1} (labelled, or one per isomorphism class).

    Labelled enumeration of all cycle sets runs the plain row search.  The
    up-to-isomorphism and labelled-indecomposable modes restrict row 0 to one
    permutation per conjugacy pattern, reduce by canonical form, and (when
    labelled output is wanted) expand every class by all relabelings.
    Output is sorted by table.
    """
    if limit is None:
        limit = DEFAULT_INDECOMPOSABLE_LIMIT if indecomposable else DEFAULT_LIMIT
    if n < 1:
        raise ValueError("n must be positive")
    if n > limit:
        raise LimitExceeded(f"n={n} exceeds the enumeration limit {limit}")
    if upto_iso:
        return _iso_classes(n, indecomposable)
    if not indecomposable:
        tables, _ = kernels.search_tables(n, None, False)
        return [CycleSet(t) for t in sorted(tables)]
    labelled = set()
    for x in _iso_classes(n, True):
        for pi in itertools.permutations(range(n)):
            labelled.add(x.relabel(pi).table)
    return [CycleSet(t) for t in sorted(labelled)]


def random_cycle_set(n: int, rng: random.Random, extra: int = 8, max_nodes: int = 20000) -> CycleSet:
    """A random cycle set on n points from a randomized row search.

    Same propagation as the exhaustive search, but each undecided row tries
    the rows already present, the identity and a few random permutations, in
    random order, and the first complete table is returned.  The
    distribution is not uniform; it is meant for sizes beyond exhaustive
    reach.
    """
    while True:
        found = _random_search(n, rng, extra, max_nodes)
        if found is not None:
            return validate_cycle_set(found)


def _random_search(n, rng, extra, max_nodes):
    rows: list = [None] * n
    budget = [max_nodes]

    def propagate(stack):
        changed = True
        while changed:
            changed = False
            for x in range(n):
                rx = rows[x]
                if rx is None:
                    continue
                for y in range(x + 1, n):
                    ry = rows[y]
                    if ry is None:
                        continue
                    u, v = rx[y], ry[x]
                    ru, rv = rows[u], rows[v]
                    if ru is not None and rv is not None:
                        if any(ru[rx[z]] != rv[ry[z]] for z in range(n)):
                            return False
                    elif ru is not None:
                        iy = inverse(ry)
                        rows[v] = tuple(ru[rx[iy[z]]] for z in range(n))
                        stack.append(v)
                        changed = True
                    elif rv is not None:
                        ix = inverse(rx)
                        rows[u] = tuple(rv[ry[ix[z]]] for z in range(n))
                        stack.append(u)
                        changed = True
        return True

    def rec():
        budget[0] -= 1
        if budget[0] < 0:
            return None
        if None not in rows:
            if len({rows[i][i] for i in range(n)}) == n:
                return [list(r) for r in rows]
            return None
        x = rows.index(None)
        cands = list({r for r in rows if r is not None} | {tuple(range(n))})
        for _ in range(extra):
            p = list(range(n))
            rng.shuffle(p)
            cands.append(tuple(p))
        rng.shuffle(cands)
        for p in cands:
            rows[x] = p
            stack = [x]
            if propagate(stack):
                got = rec()
                if got is not None:
                    return got
            for v in stack:
                rows[v] = None
        return None

    return rec()


# ---------------------------------------------------------------- cross-check

def crosscheck_pq(p: int, q: int) -> Report:
    """Compare the oracle's indecomposable classes of size pq with build_pq."""
    from .classify import enumerate_pq
    from .structure import mpl

    n = p * q
    report = Report()
    oracle = _iso_classes(n, True) if n <= DEFAULT_INDECOMPOSABLE_LIMIT else None
    if oracle is None:
        raise LimitExceeded(f"size {n} is beyond the oracle limit")
    levels = {cf.table: mpl(cf) for cf in oracle}
    built = {canonical_form(x) for x in enumerate_pq(p, q)}
    mpl2 = {t for t, m in levels.items() if m == 2}
    mpl1 = [t for t, m in levels.items() if m == 1]
    other = [t for t, m in levels.items() if m not in (1, 2)]
    n_cyclic = canonical_form(CycleSet(tuple(tuple((y + 1) % n for y in range(n)) for _ in range(n))))
    report.check("mpl2_covered", mpl2 <= built, sorted(mpl2 - built))
    report.check("builds_in_oracle", built <= mpl2, sorted(built - mpl2))
    report.check("single_mpl1_class", len(mpl1) == 1, len(mpl1))
    report.check("mpl1_is_cyclic", mpl1 == [n_cyclic], mpl1)
    report.check("no_other_levels", not other, other)
    report.metrics.update({
        "oracle_classes": len(oracle), "oracle_mpl1": len(mpl1), "oracle_mpl2": len(mpl2),
        "oracle_other": len(other), "built_classes": len(built),
    })
    if not report.ok:
        raise MismatchFound(report)
    return report
