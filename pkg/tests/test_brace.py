import numpy as np
import pytest

from cyclesets.brace import (
    SizeLimitExceeded, brace_structure, fundamental_group, lambda_of, permutation_group, pi_primary, socle,
    verify_brace, verify_socle_conjugation,
)
from cyclesets.classify import build_pqr_uniconnected, cyclic_cycle_set
from cyclesets.core import CycleSet


def test_cyclic_group_order():
    assert permutation_group(cyclic_cycle_set(5)).order == 5


def test_trivial_group_order():
    assert permutation_group(CycleSet(((0, 1, 2, 3),) * 4)).order == 1


def test_size6_group_order(size6):
    assert permutation_group(size6).order == 18


def test_size_limit(size6):
    with pytest.raises(SizeLimitExceeded):
        permutation_group(size6, limit=10)


def test_cyclic_brace_is_trivial():
    b = brace_structure(cyclic_cycle_set(6))
    idx = np.arange(b.order)
    a, c = np.meshgrid(idx, idx, indexing="ij")
    assert np.array_equal(b.add(a, c), b.mul(a, c))


def test_singleton_brace():
    b = brace_structure(cyclic_cycle_set(1))
    assert b.order == 1 and list(socle(b)) == [0]


def test_size6_additive_group(size6):
    b = brace_structure(size6)
    assert b.order == 18
    assert b.invariant_factors == [3, 6]
    assert b.exponent == 6
    orders = np.asarray(b.additive_orders)
    assert sorted(np.bincount(orders)[[1, 2, 3, 6]]) == [1, 1, 8, 8]


def test_lambda_identity_and_trivial(size6):
    b = brace_structure(size6)
    for c in range(b.order):
        assert lambda_of(b, b.identity, c) == c
    t = brace_structure(cyclic_cycle_set(4))
    for a in range(t.order):
        for c in range(t.order):
            assert lambda_of(t, a, c) == c


def test_lambda_moves_generators(size6):
    b = brace_structure(size6)
    grp = b.G.group
    gen = b.gen
    for g in range(b.order):
        perm = grp.perm(g)
        for y in range(size6.n):
            assert lambda_of(b, g, gen[y]) == gen[perm[y]]


def test_socle_examples(size6):
    assert len(socle(brace_structure(cyclic_cycle_set(5)))) == 5
    assert len(socle(brace_structure(size6))) == 9


def test_pi_primary(size6):
    b = brace_structure(size6)
    assert len(pi_primary(b, [2, 3])) == 18
    assert len(pi_primary(b, [])) == 1
    assert len(pi_primary(b, [2])) == 2
    assert len(pi_primary(b, [3])) == 9


def test_fundamental_group(size6, size6_uni):
    assert len(fundamental_group(cyclic_cycle_set(4), 0)) == 1
    assert len(fundamental_group(size6, 0)) == 3
    assert len(fundamental_group(size6_uni, 0)) == 1


def test_socle_conjugation(size6):
    assert verify_socle_conjugation(brace_structure(cyclic_cycle_set(3))).ok
    rep = verify_socle_conjugation(brace_structure(size6))
    assert rep.ok and rep.metrics["mode"] == "exhaustive"


def test_socle_conjugation_size30():
    phi0 = [[1, 0, 0], [0, 0, 0]]
    x = build_pqr_uniconnected(2, 3, 5, 2, phi0)
    assert verify_socle_conjugation(brace_structure(x)).ok


def test_verify_brace_reports_exhaustive(size6):
    rep = verify_brace(brace_structure(size6, verify=False))
    assert rep.ok and rep.metrics["triples_exhaustive"]
