"""Acceptance criteria 1-11.

Each criterion is a function returning (ok, detail).  Under pytest the
results are collected and printed as one PASS/FAIL line each in the
terminal summary; run this file directly to print them without pytest.
"""
from __future__ import annotations

import itertools
import random
import subprocess
import sys
import time
from functools import lru_cache

import numpy as np
import pytest

from cyclesets.bsgs import cycle_set_group_order
from cyclesets.classify import (
    _case2_params, admissible_gamma0, build_family, build_pq, cyclic_cycle_set,
    is_character_proportional, pqr_candidates, pqr_cocycle,
)
from cyclesets.core import CycleSetError, from_solution, to_solution, validate_cycle_set, verify_ybe
from cyclesets.extension import (
    all_maps, check_equivariance, cohomologous, equivariant_representative, indecomposability_criterion,
    is_twisted_cocycle, permutation_module, semidirect_check, twisted_extension,
)
from cyclesets.lattice import primes_of
from cyclesets.oracle import crosscheck_pq, enumerate_all, random_cycle_set
from cyclesets.structure import (
    is_coprime_extension, is_indecomposable, is_isomorphic, mpl, retraction, stabilizer_orbit_check,
    verify_soc_equals_ker_ret,
)

PQ_PAIRS = [(2, 3), (3, 2), (2, 5), (5, 2), (3, 5), (5, 3)]
PQR_TRIPLES = [(2, 3, 5), (2, 3, 7)]
PQR_PER_TRIPLE = 30
# |G(X)| bound for instances whose group is listed element by element
ENUMERABLE = 10 ** 6


@lru_cache(maxsize=None)
def instances() -> tuple:
    """(label, cycle set) for every constructor output used by criteria 1, 5 and 6.

    pqr builds are taken in candidate order, keeping those whose group
    (order by Schreier-Sims) is small enough to list for the socle check.
    """
    out = [(f"cyclic n={n}", cyclic_cycle_set(n)) for n in range(1, 13)]
    for p, q in PQ_PAIRS:
        for g in admissible_gamma0(p, q, up_to_scaling=False):
            out.append((f"pq {p},{q} {g}", build_pq(p, q, g)))
    for triple in PQR_TRIPLES:
        kept = 0
        for family, a, b, c, params in pqr_candidates(*triple):
            if kept == PQR_PER_TRIPLE:
                break
            x = build_family(family, a, b, c, params)
            if cycle_set_group_order(x) <= ENUMERABLE:
                out.append((f"{family} {a},{b},{c} {params}", x))
                kept += 1
    return tuple(out)


def criterion_1():
    items = instances()
    n_pqr = sum(1 for label, _ in items if label.split()[0] in ("uniconnected", "case1", "case2"))
    bad = []
    for label, x in items:
        try:
            validate_cycle_set(x.table)
        except CycleSetError as exc:
            bad.append((label, repr(exc)))
            continue
        rep = verify_ybe(to_solution(x))
        if not all(rep.checks[k] for k in ("involutive", "nondegenerate", "ybe")):
            bad.append((label, rep.witnesses))
    ok = not bad and n_pqr >= 50
    return ok, f"{len(items)} instances, {n_pqr} pqr builds, failures {bad[:1]}"


def criterion_2():
    rng = random.Random(20240601)
    bad = 0
    for _ in range(1000):
        x = random_cycle_set(rng.randint(1, 10), rng)
        if from_solution(to_solution(x)) != x:
            bad += 1
    return bad == 0, f"1000 round trips, {bad} mismatches"


def criterion_3():
    counts = {}
    ok = True
    for n in (2, 3, 5):
        classes = enumerate_all(n, indecomposable=True, upto_iso=True)
        counts[n] = len(classes)
        ok &= len(classes) == 1 and is_isomorphic(classes[0], cyclic_cycle_set(n)) is not None
    return ok, f"indecomposable classes {counts}"


def criterion_4():
    rep = crosscheck_pq(2, 3)
    return rep.ok, f"metrics {rep.metrics}"


def criterion_5():
    bad = []
    for label, x in instances():
        rep = verify_soc_equals_ker_ret(x)
        if not rep.ok:
            bad.append((label, rep.witnesses))
    return not bad, f"{len(instances())} instances, failures {bad[:1]}"


def _squarefree(n: int) -> bool:
    return all(n % (p * p) for p in primes_of(n))


def criterion_6():
    checked = 0
    bad = []
    for label, x in instances():
        if x.n < 2 or not _squarefree(x.n) or not is_indecomposable(x):
            continue
        checked += 1
        level = mpl(x)
        primes_ok = set(primes_of(cycle_set_group_order(x))) == set(primes_of(x.n))
        _, proj = retraction(x)
        if not (level < float("inf") and primes_ok and is_coprime_extension(proj, limit=ENUMERABLE)):
            bad.append(label)
    return not bad and checked > 0, f"{checked} squarefree indecomposable instances, failures {bad[:1]}"


def semidirect_instances(count: int = 24) -> list:
    """Coprime indecomposable twisted extensions of size 30 and 42 built from
    the pqr families, interleaving the triples and keeping |G(Y)| small."""
    streams = [pqr_candidates(*t) for t in PQR_TRIPLES]
    out = []
    seen = set()
    for family, p, q, r, params in itertools.chain.from_iterable(zip(*streams)):
        if len(out) == count:
            break
        try:
            phi = pqr_cocycle(family, p, q, r, **params)
        except CycleSetError:
            continue
        if np.gcd(phi.module.group.order, r) != 1:
            continue
        y, _ = twisted_extension(phi)
        if y.table in seen or not is_indecomposable(y) or cycle_set_group_order(y) > 3 * 10 ** 6:
            continue
        seen.add(y.table)
        out.append((family, (p, q, r), phi))
    return out


def criterion_7():
    t0 = time.perf_counter()
    items = semidirect_instances()
    bad = []
    families = set()
    for family, triple, phi in items:
        families.add(family)
        rep = semidirect_check(phi)
        m = rep.metrics
        if not rep.ok or m["group_order"] != m["base_group_order"] * m["K_order"]:
            bad.append((family, triple, rep.witnesses))
    ok = not bad and len(items) >= 20 and {"case1", "case2"} <= families
    return ok, (f"{len(items)} extensions, families {sorted(families)}, failures {bad[:1]}, "
                f"{time.perf_counter() - t0:.0f}s")


def z2_z3_module():
    return permutation_module(cyclic_cycle_set(2), (3,))


def _random_vec(rng: random.Random, length: int, r: int, zero_rate: float = 0.2) -> list[int]:
    if rng.random() < zero_rate:
        return [0] * length
    return [rng.randrange(r) for _ in range(length)]


def random_admissible(rng: random.Random, count: int) -> list:
    """Random equivariant Phi over size-6 bases with fibers Z_5 or Z_7."""
    case2_pool = {}
    for p, q, r in [(2, 3, 5), (2, 3, 7), (3, 2, 5), (3, 2, 7)]:
        keys = {}
        for _, _, _, _, params in _case2_params(p, q, r):
            keys.setdefault((tuple(params["gamma0"]), tuple(params["xi"])), tuple(sorted(params["c"])))
        case2_pool[(p, q, r)] = sorted(keys.items())
    out = []
    while len(out) < count:
        p, q, r = rng.choice([(2, 3, 5), (2, 3, 7), (3, 2, 5), (3, 2, 7)])
        family = rng.choice(["uniconnected", "case1", "case2"])
        if family == "uniconnected":
            if (q - 1) % p:
                continue
            xi = rng.choice([v for v in range(2, q) if pow(v, p, q) == 1])
            params = {"xi": xi, "phi0": [_random_vec(rng, q, r) for _ in range(p)]}
        elif family == "case1":
            gammas = [g for g in admissible_gamma0(p, q, up_to_scaling=False)
                      if is_character_proportional(g, p, q) is None]
            params = {"gamma0": list(rng.choice(gammas)), "phi1": _random_vec(rng, q, r),
                      "phi2": _random_vec(rng, p - 1, r)}
        else:
            if not case2_pool[(p, q, r)]:
                continue
            (g, xi), keys = rng.choice(case2_pool[(p, q, r)])
            c = [rng.randrange(r) for _ in keys]
            if not any(c):
                continue
            params = {"gamma0": list(g), "xi": list(xi), "c": dict(zip(keys, c))}
        try:
            out.append((family, (p, q, r), pqr_cocycle(family, p, q, r, **params)))
        except CycleSetError:
            continue
    return out


def criterion_8():
    mismatches = []
    small = 0
    for phi in all_maps(z2_z3_module()):
        if not check_equivariance(phi, full=True):
            continue
        small += 1
        y, _ = twisted_extension(phi)
        if indecomposability_criterion(phi) != is_indecomposable(y):
            mismatches.append(phi.residues())
    rng = random.Random(8)
    truth = []
    for family, triple, phi in random_admissible(rng, 200):
        y, _ = twisted_extension(phi)
        got = is_indecomposable(y)
        truth.append(got)
        if indecomposability_criterion(phi) != got:
            mismatches.append((family, triple, phi.residues()))
    return not mismatches, (f"{small} equivariant maps on Z_2/Z_3, 200 random at sizes 30/42 "
                            f"({sum(truth)} indecomposable), mismatches {mismatches[:1]}")


def criterion_9():
    bad = []
    total = 0
    for p, q in [(2, 3), (3, 2), (2, 5)]:
        for g in admissible_gamma0(p, q, up_to_scaling=False):
            total += 1
            if not stabilizer_orbit_check(p, q, g).ok:
                bad.append((p, q, g))
    return not bad and total > 0, f"{total} gamma0 values, failures {bad[:1]}"


def criterion_10():
    cocycles = 0
    bad = []
    for phi in all_maps(z2_z3_module()):
        if not is_twisted_cocycle(phi):
            continue
        cocycles += 1
        try:
            rep = equivariant_representative(phi)
        except Exception as exc:  # a finding, reported with the map
            bad.append((phi.residues(), repr(exc)))
            continue
        if cohomologous(phi, rep) is None:
            bad.append((phi.residues(), "representative not cohomologous"))
    return not bad and cocycles > 0, f"{cocycles} twisted cocycles among 81 maps, findings {bad[:1]}"


def _classify_run() -> tuple[int, bytes]:
    cmd = [sys.executable, "-c", "import sys; from cyclesets.cli import main; sys.exit(main())",
           "classify", "pqr", "--p", "2", "--q", "3", "--r", "7"]
    res = subprocess.run(cmd, capture_output=True, check=False)
    return res.returncode, res.stdout


def criterion_11():
    first = _classify_run()
    second = _classify_run()
    ok = first == second and first[0] in (0, 4) and len(first[1]) > 0
    return ok, f"exit codes {first[0]}, {second[0]}; {len(first[1])} bytes"


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 12)}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, acceptance):
    ok, detail = CRITERIA[number]()
    acceptance[number] = (ok, detail)
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, detail


if __name__ == "__main__":
    for number, fn in CRITERIA.items():
        ok, detail = fn()
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})", flush=True)
