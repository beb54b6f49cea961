import random

import pytest

from cyclesets.classify import build_pq, cyclic_cycle_set
from cyclesets.core import CycleSet, validate_cycle_set
from cyclesets.oracle import (
    LimitExceeded, canonical_cycle_set, canonical_form, crosscheck_pq, enumerate_all, random_cycle_set,
)
from cyclesets.structure import is_indecomposable, is_isomorphic


def test_n1():
    assert len(enumerate_all(1)) == 1


def test_n2_contains_cyclic_and_trivial():
    tables = {x.table for x in enumerate_all(2)}
    assert cyclic_cycle_set(2).table in tables
    assert ((0, 1), (0, 1)) in tables


# Labelled and unlabelled counts of cycle sets (nondegenerate involutive solutions),
# recomputed here by brute force for n <= 3 and frozen for n = 4.
def _brute(n):
    import itertools
    perms = list(itertools.permutations(range(n)))
    out = []
    for rows in itertools.product(perms, repeat=n):
        try:
            out.append(validate_cycle_set(rows))
        except ValueError:
            pass
    return out


@pytest.mark.parametrize("n", [1, 2, 3])
def test_labelled_matches_brute_force(n):
    assert sorted(x.table for x in enumerate_all(n)) == sorted(x.table for x in _brute(n))


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 5), (4, 23), (5, 88)])
def test_counts_up_to_iso(n, count):
    assert len(enumerate_all(n, upto_iso=True)) == count


def test_n3_indecomposable():
    found = enumerate_all(3, indecomposable=True, upto_iso=True)
    assert len(found) == 1
    assert is_isomorphic(found[0], cyclic_cycle_set(3)) is not None


def test_labelled_indecomposable_are_indecomposable():
    found = enumerate_all(4, indecomposable=True)
    assert found and all(is_indecomposable(x) for x in found)


def test_limit():
    with pytest.raises(LimitExceeded):
        enumerate_all(12)
    with pytest.raises(LimitExceeded):
        enumerate_all(5, limit=4)


def test_canonical_form_invariance(size6):
    rng = random.Random(3)
    pi = list(range(6))
    rng.shuffle(pi)
    assert canonical_form(size6.relabel(pi)) == canonical_form(size6)
    assert canonical_form(build_pq(2, 3, (0, 2))) == canonical_form(size6)
    assert canonical_form(build_pq(2, 3, (1, 2))) != canonical_form(size6)


def test_canonical_is_fixed_point(size6):
    c = canonical_cycle_set(size6)
    assert canonical_cycle_set(c) == c
    assert CycleSet(canonical_form(c)) == c


def test_random_cycle_sets_are_valid():
    rng = random.Random(0)
    for _ in range(30):
        x = random_cycle_set(rng.randint(1, 10), rng)
        validate_cycle_set(x.table)


def test_crosscheck_pq_23():
    rep = crosscheck_pq(2, 3)
    assert rep.ok
    assert rep.metrics["oracle_mpl1"] == 1
    assert rep.metrics["oracle_other"] == 0
