import pytest

from cyclesets.bsgs import cycle_set_group_order
from cyclesets.classify import (
    AllCZero, BothPhiZero, BudgetExceeded, ConstantPhi0, KernelSpace, NotGenerating, NotInNChi, Periodic,
    admissible_gamma0, build_pq, build_pqr_case1, build_pqr_case2, build_pqr_uniconnected, chi_x,
    cyclic_cycle_set, describe, enumerate_pq, enumerate_pq_detailed, enumerate_pqr, is_character_proportional,
    n_chi, phi_x0_map, tower_sizes, via_extension,
)
from cyclesets.core import product_index
from cyclesets.lattice import primes_of
from cyclesets.oracle import canonical_form
from cyclesets.structure import is_indecomposable, mpl
from cyclesets.brace import fundamental_group, permutation_group


def test_cyclic():
    assert cyclic_cycle_set(1).n == 1
    x = cyclic_cycle_set(5)
    assert is_indecomposable(x) and permutation_group(x).order == 5
    assert len(fundamental_group(x, 0)) == 1
    assert mpl(cyclic_cycle_set(4)) == 1


def test_build_pq_entry():
    x = build_pq(2, 3, (0, 1))
    assert x.op(product_index((0, 0), (2, 3)), product_index((1, 2), (2, 3))) == 0


def test_build_pq_rejects():
    with pytest.raises(NotGenerating):
        build_pq(2, 3, (0, 0))
    with pytest.raises(Periodic):
        build_pq(2, 3, (1, 1))


def test_build_pq_32():
    assert mpl(build_pq(3, 2, (0, 1, 1))) == 2


def test_character_proportional():
    assert is_character_proportional((1, 2), 2, 3) == (1, 2)
    assert is_character_proportional((0, 1), 2, 3) is None
    for g in admissible_gamma0(3, 2, up_to_scaling=False):
        assert is_character_proportional(g, 3, 2) is None


def test_uniconnected_build():
    phi0 = [[1, 0, 0], [0, 0, 0]]
    x = build_pqr_uniconnected(2, 3, 5, 2, phi0)
    assert x.n == 30 and is_indecomposable(x)
    assert x.op(0, 0) == product_index((1, 1, 1), (2, 3, 5))
    assert tower_sizes(x) == [30, 6, 2, 1]
    with pytest.raises(ConstantPhi0):
        build_pqr_uniconnected(2, 3, 5, 2, [[1, 1, 1], [1, 1, 1]])


def test_chi():
    assert chi_x([2], 0, [0, 0], 7) == 1
    assert chi_x([2], 0, [0, 1], 7) == 2
    assert chi_x([2], 1, [0, 1], 7) == 1


def test_n_chi_and_phi_x0():
    k0 = KernelSpace(2, 3, (0, 1)).K0
    assert k0 == [[0, 1]]
    assert n_chi(k0, [1], 2, 3, 7) == [0, 1]
    assert n_chi(k0, [2], 2, 3, 7) == [1]
    assert phi_x0_map(1, [2], k0, 2, 3, 7) == [[0, 0, 0], [1, 1, 1]]
    with pytest.raises(NotInNChi):
        phi_x0_map(0, [2], k0, 2, 3, 7)


def test_case1_build():
    x = build_pqr_case1(2, 3, 5, (0, 1), (0, 1, 0), (0,))
    assert x.n == 30 and is_indecomposable(x)
    a = product_index((0, 0, 0), (2, 3, 5))
    b = product_index((0, 1, 0), (2, 3, 5))
    assert x.op(a, b) == product_index((1, 1, 1), (2, 3, 5))
    with pytest.raises(BothPhiZero):
        build_pqr_case1(2, 3, 5, (0, 1), (0, 0, 0), (0,))


def test_case2_build():
    x = build_pqr_case2(2, 3, 7, (0, 1), [2], {1: 1})
    assert x.n == 42 and is_indecomposable(x)
    assert x.op(0, 0) == product_index((1, 0, 0), (2, 3, 7))
    assert tower_sizes(x) == [42, 6, 2, 1]
    with pytest.raises(AllCZero):
        build_pqr_case2(2, 3, 7, (0, 1), [2], {1: 0})


@pytest.mark.parametrize("family,p,q,r,params", [
    ("uniconnected", 2, 3, 5, {"xi": 2, "phi0": [[1, 0, 0], [0, 0, 0]]}),
    ("case1", 2, 3, 5, {"gamma0": (0, 1), "phi1": (0, 1, 0), "phi2": (0,)}),
    ("case1", 2, 3, 7, {"gamma0": (0, 1), "phi1": (0, 0, 0), "phi2": (1,)}),
    ("case2", 2, 3, 7, {"gamma0": (0, 1), "xi": [2], "c": {1: 1}}),
])
def test_direct_formula_matches_extension(family, p, q, r, params):
    from cyclesets.classify import build_family
    assert via_extension(family, p, q, r, **params) == build_family(family, p, q, r, params)


def test_describe():
    x = build_pqr_case2(2, 3, 7, (0, 1), [2], {1: 1})
    d = describe(x, "case2", {"p": 2})
    assert d["group_order"] == 882 and d["socle_order"] == 49 and d["mpl"] == 3
    assert not d["uniconnected"]


def test_enumerate_pq_23(size6, size6_uni):
    found = enumerate_pq(2, 3)
    forms = {canonical_form(x) for x in found}
    assert canonical_form(size6) in forms and canonical_form(size6_uni) in forms
    assert canonical_form(build_pq(2, 3, (0, 2))) == canonical_form(size6)
    assert all(x.n == 6 and mpl(x) == 2 and is_indecomposable(x) for x in found)
    assert len(found) == len(forms)


def test_enumerate_pq_detailed_params():
    for x, family, params in enumerate_pq_detailed(3, 2):
        assert family == "pq"
        assert build_pq(params["m"], params["k"], params["gamma0"]) == x


def test_enumerate_pq_35_completes():
    found = enumerate_pq(3, 5)
    assert found and all(x.n == 15 for x in found)


def test_enumerate_pqr_budget():
    with pytest.raises(BudgetExceeded) as err:
        enumerate_pqr(2, 3, 5, budget=12)
    partial = err.value.partial
    assert partial
    for x in partial:
        assert set(primes_of(cycle_set_group_order(x))) == {2, 3, 5}


def test_enumerate_pqr_237_has_case2():
    try:
        members = enumerate_pqr(2, 3, 7, budget=40, detailed=True)
    except BudgetExceeded as exc:
        members = exc.partial
    assert any(family == "case2" for _, family, _ in members)
