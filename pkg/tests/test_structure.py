import math

import pytest

from cyclesets.classify import build_pq, build_pqr_case2, build_pqr_uniconnected, cyclic_cycle_set
from cyclesets.core import CycleSet, validate_cycle_set
from cyclesets.structure import (
    CycleSetHom, NotSurjective, TargetDecomposable, ZeroForcingInstance, extensions_equivalent, identity_hom,
    is_coprime_extension, is_extension, is_indecomposable, is_isomorphic, is_uniconnected, mpl, retraction,
    retraction_tower, stabilizer_orbit_check, stabilizer_orbits, verify_soc_equals_ker_ret, zero_forcing,
)
from cyclesets.extension import GammaMap, parallel_extension


def trivial(n):
    return CycleSet((tuple(range(n)),) * n)


@pytest.fixture(scope="module")
def case2():
    return build_pqr_case2(2, 3, 7, (0, 1), [2], {1: 1})


def test_retraction_cyclic():
    q, f = retraction(cyclic_cycle_set(5))
    assert q.n == 1 and set(f.map) == {0}


def test_retraction_size6(size6):
    q, f = retraction(size6)
    assert q.n == 2
    assert f.map == (0, 0, 0, 1, 1, 1)
    assert is_isomorphic(q, cyclic_cycle_set(2)) is not None


def test_retraction_trivial():
    assert retraction(trivial(3))[0].n == 1


def test_mpl():
    assert mpl(cyclic_cycle_set(1)) == 0
    assert mpl(cyclic_cycle_set(4)) == 1
    assert mpl(build_pq(2, 3, (0, 1))) == 2


def test_mpl_case2(case2):
    assert [y.n for y in retraction_tower(case2)] == [42, 6, 2, 1]
    assert mpl(case2) == 3


def test_mpl_infinite():
    # an irretractable size-4 cycle set: all four rows differ
    x = validate_cycle_set([[0, 1, 3, 2], [2, 3, 1, 0], [1, 0, 2, 3], [3, 2, 0, 1]])
    assert retraction(x)[0].n == 4
    assert mpl(x) == math.inf


def test_indecomposable():
    assert is_indecomposable(cyclic_cycle_set(5))
    assert not is_indecomposable(trivial(2))
    zero = GammaMap.from_residues(cyclic_cycle_set(2), (3,), [[0, 0], [0, 0]])
    y, _ = parallel_extension(zero)
    assert not is_indecomposable(y)


def test_uniconnected(size6, size6_uni):
    assert is_uniconnected(cyclic_cycle_set(3))
    assert is_uniconnected(size6_uni)
    assert not is_uniconnected(size6)


def test_is_extension(size6):
    _, f = retraction(size6)
    assert is_extension(f)
    assert is_extension(identity_hom(size6))
    proj = CycleSetHom(size6, cyclic_cycle_set(2), tuple(i // 3 for i in range(6)))
    assert is_extension(proj)


def test_is_extension_errors(size6):
    with pytest.raises(NotSurjective):
        is_extension(CycleSetHom(trivial(2), trivial(3), (0, 1)))
    with pytest.raises(TargetDecomposable):
        is_extension(CycleSetHom(trivial(2), trivial(2), (0, 1)))


def test_coprime_extension(size6, case2):
    proj = CycleSetHom(size6, cyclic_cycle_set(2), tuple(i // 3 for i in range(6)))
    assert is_coprime_extension(proj)
    assert is_coprime_extension(identity_hom(size6))
    _, f = retraction(case2)
    assert f.target.n == 6
    assert is_coprime_extension(f)


def test_isomorphism(size6, size6_uni):
    assert is_isomorphic(size6, size6) == tuple(range(6))
    assert is_isomorphic(cyclic_cycle_set(3), trivial(3)) is None
    f = is_isomorphic(size6, build_pq(2, 3, (0, 2)))
    assert f is not None
    y = build_pq(2, 3, (0, 2))
    assert all(y.op(f[a], f[b]) == f[size6.op(a, b)] for a in range(6) for b in range(6))
    assert is_isomorphic(size6, size6_uni) is None


def _parallel(gamma0):
    base = cyclic_cycle_set(2)
    vals = [[gamma0[(y - x) % 2] for y in range(2)] for x in range(2)]
    return parallel_extension(GammaMap.from_residues(base, (3,), vals))[1]


def test_extensions_equivalent():
    f = _parallel((0, 1))
    assert extensions_equivalent(f, f) == tuple(range(6))
    assert extensions_equivalent(f, _parallel((0, 2))) is not None
    assert extensions_equivalent(f, _parallel((1, 2))) is None


def test_zero_forcing():
    assert zero_forcing(ZeroForcingInstance(3, 5, (), frozenset())) == frozenset({0, 1, 2})
    assert zero_forcing(ZeroForcingInstance(2, 3, ((1, 2),), frozenset({0}))) == frozenset({0, 1})
    assert zero_forcing(ZeroForcingInstance(2, 3, ((0, 1), (1, 0)), frozenset({0}))) == frozenset({0})


def test_stabilizer_orbits(size6, size6_uni):
    assert stabilizer_orbits(size6_uni, 0) == [[v] for v in range(6)]
    assert stabilizer_orbits(size6, 0) == [[0], [1], [2], [3, 4, 5]]


@pytest.mark.parametrize("p,q,g", [(2, 3, (1, 2)), (2, 3, (0, 1)), (3, 2, (0, 1, 1)), (3, 2, (0, 0, 1))])
def test_stabilizer_orbit_check(p, q, g):
    rep = stabilizer_orbit_check(p, q, g)
    assert rep.ok
    if p == 3:
        assert not rep.metrics["character"]


def test_soc_equals_ker(size6):
    rep = verify_soc_equals_ker_ret(cyclic_cycle_set(4))
    assert rep.ok and rep.metrics["kernel_order"] == 4
    rep = verify_soc_equals_ker_ret(size6)
    assert rep.ok and rep.metrics["kernel_order"] == rep.metrics["socle_order"] == 9


def test_soc_equals_ker_size30():
    x = build_pqr_uniconnected(2, 3, 5, 2, [[1, 0, 0], [0, 0, 0]])
    assert verify_soc_equals_ker_ret(x).ok


def test_soc_equals_ker_generator_mode():
    x = build_pqr_uniconnected(2, 3, 5, 2, [[1, 0, 0], [0, 0, 0]])
    rep = verify_soc_equals_ker_ret(x, full_brace_limit=10)
    assert rep.ok and rep.metrics["socle_mode"] == "generators"
