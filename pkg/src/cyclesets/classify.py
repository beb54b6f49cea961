"""Closed-form constructors for indecomposable cycle sets of sizes p, pq and
pqr, and enumerators over their parameters.

Points are flattened as x*k + a for Z_m x Z_k and ((x*q + a)*r + s) for
Z_p x Z_q x Z_r.
"""
from __future__ import annotations

import itertools
import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from . import modp
from .brace import InternalInvariantViolation
from .bsgs import cycle_set_group_order
from .core import CycleSet, CycleSetError, validate_cycle_set
from .extension import CocycleMap, GradedModule, permutation_module, phi_from_phi0, twisted_extension
from .lattice import primes_of
from .structure import (_fingerprints, is_coprime_extension, is_indecomposable, is_isomorphic, mpl, retraction,
                        retraction_tower)


class NotGenerating(CycleSetError):
    """The values of gamma0 do not generate Z_k."""


class Periodic(CycleSetError):
    """gamma0 is invariant under a nonzero shift, so the level drops below 2."""


class ConstantPhi0(CycleSetError):
    pass


class BadXi(CycleSetError):
    pass


class BothPhiZero(CycleSetError):
    pass


class CharacterProportional(CycleSetError):
    """gamma0 is a multiple of a character; the uniconnected family applies."""


class NoUnitValue(CycleSetError):
    pass


class TrivialChi(CycleSetError):
    pass


class AllCZero(CycleSetError):
    pass


class NotInNChi(CycleSetError):
    pass


class WellDefinednessFailure(CycleSetError):
    pass


class BudgetExceeded(RuntimeError):
    def __init__(self, partial: list, budget: int):
        self.partial = partial
        self.budget = budget
        super().__init__(f"stopped after {budget} raw candidates with {len(partial)} classes found")


def is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


def _require_primes(*ps: int) -> None:
    if any(not is_prime(p) for p in ps) or len(set(ps)) != len(ps):
        raise ValueError(f"expected distinct primes, got {ps}")


# ---------------------------------------------------------------- size p

def cyclic_cycle_set(n: int) -> CycleSet:
    """x * y = y + 1 on Z_n."""
    if n < 1:
        raise ValueError("n must be positive")
    return validate_cycle_set([[(y + 1) % n for y in range(n)] for _ in range(n)])


# ---------------------------------------------------------------- size pq

def check_gamma0(m: int, k: int, gamma0: Sequence[int]) -> tuple[int, ...]:
    g = tuple(int(v) % k for v in gamma0)
    if len(g) != m:
        raise ValueError(f"gamma0 needs {m} values")
    if math.gcd(m, k) != 1:
        raise ValueError("m and k must be coprime")
    if math.gcd(k, *g) != 1:
        raise NotGenerating(f"values {list(g)} do not generate Z_{k}")
    for d in range(1, m):
        if all(g[(x + d) % m] == g[x] for x in range(m)):
            raise Periodic(f"gamma0 is invariant under the shift by {d}")
    return g


def pq_table(m: int, k: int, gamma0: Sequence[int]) -> list[list[int]]:
    return [[((y + 1) % m) * k + (b + gamma0[(y - x) % m]) % k for y in range(m) for b in range(k)]
            for x in range(m) for _ in range(k)]


def build_pq(m: int, k: int, gamma0: Sequence[int]) -> CycleSet:
    """(x, a) * (y, b) = (y + 1, b + gamma0(y - x)) on Z_m x Z_k."""
    g = check_gamma0(m, k, gamma0)
    return validate_cycle_set(pq_table(m, k, g))


def is_character_proportional(gamma0: Sequence[int], p: int, q: int) -> tuple[int, int] | None:
    """(alpha, xi) with gamma0(x) = alpha * xi^x and xi^p = 1 mod q, if any."""
    g = [int(v) % q for v in gamma0]
    alpha = g[0]
    if alpha == 0:
        return None
    for xi in range(1, q):
        if pow(xi, p, q) == 1 and all(g[x] == alpha * pow(xi, x, q) % q for x in range(p)):
            return alpha, xi
    return None


def admissible_gamma0(m: int, k: int, up_to_scaling: bool = True) -> list[tuple[int, ...]]:
    """All gamma0 accepted by build_pq, optionally one per orbit of Z_k^* scaling."""
    out = []
    units = [u for u in range(1, k) if math.gcd(u, k) == 1]
    for g in itertools.product(range(k), repeat=m):
        try:
            check_gamma0(m, k, g)
        except (NotGenerating, Periodic):
            continue
        if up_to_scaling and any(tuple(u * v % k for v in g) < g for u in units):
            continue
        out.append(g)
    return out


# ---------------------------------------------------------------- size pqr, uniconnected retraction

def build_pqr_uniconnected(p: int, q: int, r: int, xi: int, phi0: Sequence[Sequence[int]]) -> CycleSet:
    """(x,a,s) * (y,b,t) = (y+1, b + xi^(y-x), t + phi0(y-x, b - xi^(y-x) a))."""
    _require_primes(p, q, r)
    xi = int(xi) % q
    if xi == 1 or pow(xi, p, q) != 1:
        raise BadXi(f"xi={xi} must satisfy xi^{p} = 1 != xi mod {q}")
    f = np.asarray(phi0, dtype=np.int64) % r
    if f.shape != (p, q):
        raise ValueError(f"phi0 must be a {p} x {q} array")
    if (f == f.flat[0]).all():
        raise ConstantPhi0("phi0 must be nonconstant")
    pw = [pow(xi, d, q) for d in range(p)]
    table = []
    for x, a, s in itertools.product(range(p), range(q), range(r)):
        row = []
        for y, b, t in itertools.product(range(p), range(q), range(r)):
            d = (y - x) % p
            row.append((((y + 1) % p) * q + (b + pw[d]) % q) * r + (t + int(f[d, (b - pw[d] * a) % q])) % r)
        table.append(row)
    return validate_cycle_set(table)


# ---------------------------------------------------------------- size pqr, case 1

def build_pqr_case1(p: int, q: int, r: int, gamma0: Sequence[int], phi1: Sequence[int],
                    phi2: Sequence[int]) -> CycleSet:
    """Third coordinate t + phi1(b - a) when x = y and t + phi2(x - y) otherwise.

    ``phi2`` lists the values at 1, ..., p-1.
    """
    _require_primes(p, q, r)
    g = check_gamma0(p, q, gamma0)
    if is_character_proportional(g, p, q) is not None:
        raise CharacterProportional(f"gamma0={list(g)} is a multiple of a character")
    f1 = [int(v) % r for v in phi1]
    f2 = [int(v) % r for v in phi2]
    if len(f1) != q or len(f2) != p - 1:
        raise ValueError(f"phi1 needs {q} values and phi2 needs {p - 1}")
    if not any(f1) and not any(f2):
        raise BothPhiZero("phi1 and phi2 are both zero")
    table = []
    for x, a, s in itertools.product(range(p), range(q), range(r)):
        row = []
        for y, b, t in itertools.product(range(p), range(q), range(r)):
            third = f1[(b - a) % q] if x == y else f2[(x - y) % p - 1]
            row.append((((y + 1) % p) * q + (b + g[(y - x) % p]) % q) * r + (t + third) % r)
        table.append(row)
    return validate_cycle_set(table)


# ---------------------------------------------------------------- size pqr, case 2

@dataclass(frozen=True)
class KernelSpace:
    """K = span of the shifts Gamma_x(y) = gamma0(y - x) in Z_q^{Z_p}, and
    K0 = {f in K : f(0) = 0}."""

    p: int
    q: int
    gamma0: tuple[int, ...]

    def gamma(self, x: int) -> tuple[int, ...]:
        return tuple(self.gamma0[(y - x) % self.p] for y in range(self.p))

    @property
    def K(self) -> list[list[int]]:
        return modp.rref([self.gamma(x) for x in range(self.p)], self.q)[0]

    @property
    def K0(self) -> list[list[int]]:
        return _vanishing(self.K, [0], self.q, self.p)


def _vanishing(basis: Sequence[Sequence[int]], points: Sequence[int], q: int, width: int) -> list[list[int]]:
    """Basis of {f in span(basis) : f(points) = 0}."""
    if not basis:
        return []
    rows = [[b[j] for b in basis] for j in points]
    coeffs = modp.nullspace(rows, q, width=len(basis)) if rows else [
        [int(i == j) for j in range(len(basis))] for i in range(len(basis))]
    out = [[sum(c[i] * basis[i][k] for i in range(len(basis))) % q for k in range(width)] for c in coeffs]
    return modp.rref(out, q)[0] if out else []


def chi_x(xi: Sequence[int], x: int, f: Sequence[int], r: int) -> int:
    """prod over y in Z_p^* of xi_y^f(y+x) mod r; xi lists xi_1, ..., xi_{p-1}."""
    p = len(f)
    out = 1
    for y in range(1, p):
        out = out * pow(int(xi[y - 1]), int(f[(y + x) % p]), r) % r
    return out


def _check_xi(xi: Sequence[int], p: int, q: int, r: int) -> list[int]:
    vals = [int(v) % r for v in xi]
    if len(vals) != p - 1:
        raise ValueError(f"xi needs {p - 1} values")
    if any(pow(v, q, r) != 1 for v in vals):
        raise BadXi(f"every xi_y must satisfy xi_y^{q} = 1 mod {r}")
    return vals


def n_chi(k0: Sequence[Sequence[int]], xi: Sequence[int], p: int, q: int, r: int) -> list[int]:
    """{x : every f in K0 with f(x) = 0 has chi_x(f) = 1}."""
    out = []
    for x in range(p):
        basis = _vanishing(k0, [x], q, p)
        if all(chi_x(xi, x, f, r) == 1 for f in basis):
            out.append(x)
    return out


def phi_x0_map(x: int, xi: Sequence[int], k0: Sequence[Sequence[int]], p: int, q: int, r: int) -> list[list[int]]:
    """phi_x^0(y, a) = 0 for y != x and chi_x(f) for any f in K0 with f(x) = a."""
    if x not in n_chi(k0, xi, p, q, r):
        raise NotInNChi(f"{x} is not in N_chi")
    out = [[0] * q for _ in range(p)]
    seen: dict[int, int] = {}
    for f in modp.span_elements(k0, q, p):
        a = f[x]
        v = chi_x(xi, x, f, r)
        if seen.setdefault(a, v) != v:
            raise WellDefinednessFailure(f"two f with f({x}) = {a} give different characters")
    if len(seen) != q:
        raise WellDefinednessFailure(f"K0 does not reach every value at {x}")
    for a, v in seen.items():
        out[x][a] = v
    return out


def normalize_gamma0(gamma0: Sequence[int], p: int, q: int) -> tuple[tuple[int, ...], int]:
    """Rescale so that 1 is a value (by the inverse of the first nonzero value
    when needed) and return it with x0, the least x with gamma0(-x) = 1."""
    g = [int(v) % q for v in gamma0]
    if 1 not in g:
        nz = next((v for v in g if v), None)
        if nz is None:
            raise NoUnitValue("gamma0 is zero")
        inv = pow(nz, -1, q)
        g = [v * inv % q for v in g]
    x0 = next((x for x in range(p) if g[(-x) % p] == 1), None)
    if x0 is None:
        raise NoUnitValue("no x0 with gamma0(-x0) = 1")
    return tuple(g), x0


@dataclass(frozen=True)
class Case2Data:
    gamma0: tuple[int, ...]
    x0: int
    xi: tuple[int, ...]
    k0: tuple[tuple[int, ...], ...]
    n_chi: tuple[int, ...]
    phi0: tuple[tuple[int, ...], ...]


def case2_data(p: int, q: int, r: int, gamma0: Sequence[int], xi: Sequence[int],
               c: Mapping[int, int] | Sequence[int]) -> Case2Data:
    _require_primes(p, q, r)
    if (r - 1) % q:
        raise ValueError(f"case 2 needs {q} | {r} - 1")
    g, x0 = normalize_gamma0(gamma0, p, q)
    check_gamma0(p, q, g)
    if is_character_proportional(g, p, q) is not None:
        raise CharacterProportional(f"gamma0={list(g)} is a multiple of a character")
    xs = _check_xi(xi, p, q, r)
    k0 = KernelSpace(p, q, g).K0
    nset = n_chi(k0, xs, p, q, r)
    if 0 in nset:
        raise TrivialChi("chi is trivial on K0")
    coeff = dict(enumerate(c)) if not isinstance(c, Mapping) else {int(k): v for k, v in c.items()}
    coeff = {k: int(v) % r for k, v in coeff.items() if int(v) % r}
    for k in coeff:
        if k not in nset:
            raise NotInNChi(f"c_{k} is nonzero but {k} is not in N_chi {nset}")
    if not coeff:
        raise AllCZero("all c_x are zero")
    phi0 = np.zeros((p, q), dtype=np.int64)
    for k, v in coeff.items():
        phi0 = (phi0 + v * np.asarray(phi_x0_map(k, xs, k0, p, q, r))) % r
    return Case2Data(g, x0, tuple(xs), tuple(map(tuple, k0)), tuple(nset), tuple(map(tuple, phi0.tolist())))


def build_pqr_case2(p: int, q: int, r: int, gamma0: Sequence[int], xi: Sequence[int],
                    c: Mapping[int, int] | Sequence[int]) -> CycleSet:
    """Third coordinate chi_y(Gamma_x) (t + chi_{y-x}(a Gamma_x0) phi0(y-x, b - a Gamma_x0(y-x)))."""
    d = case2_data(p, q, r, gamma0, xi, c)
    g = d.gamma0
    phi0 = d.phi0
    gam = [[g[(y - x) % p] for y in range(p)] for x in range(p)]
    gx0 = gam[d.x0]
    # chi_y(Gamma_x) and chi_u(a Gamma_x0)
    chi_g = [[chi_x(d.xi, y, gam[x], r) for y in range(p)] for x in range(p)]
    chi_a = [[chi_x(d.xi, u, [a * v % q for v in gx0], r) for u in range(p)] for a in range(q)]
    table = []
    for x, a, s in itertools.product(range(p), range(q), range(r)):
        row = []
        for y, b, t in itertools.product(range(p), range(q), range(r)):
            u = (y - x) % p
            inner = (t + chi_a[a][u] * phi0[u][(b - a * gx0[u]) % q]) % r
            row.append((((y + 1) % p) * q + (b + g[u]) % q) * r + chi_g[x][y] * inner % r)
        table.append(row)
    return validate_cycle_set(table)


# ---------------------------------------------------------------- the extension route

def pq_module(p: int, q: int, r: int, gamma0: Sequence[int], xi: Sequence[int] | None = None) -> GradedModule:
    """The Z_p x_G Z_q-graded module with every component Z_r, where (d, f)
    acts on A_(x,a) by chi_x(f); xi = None gives the permutation module."""
    base = build_pq(p, q, gamma0)
    if xi is None:
        return permutation_module(base, (r,))
    scal: dict[int, list[list[list[int]]]] = {}
    for x, a in itertools.product(range(p), range(q)):
        # lambda_(x,a)(y, b) = (y - 1, b + f(y)) with f(y) = -gamma0(y - 1 - x)
        f = [(-gamma0[(y - 1 - x) % p]) % q for y in range(p)]
        scal[x * q + a] = [[[chi_x(xi, y, f, r)]] for y in range(p) for _ in range(q)]
    return GradedModule(base, tuple((r,) for _ in range(p * q)), scal)


def pqr_cocycle(family: str, p: int, q: int, r: int, **params) -> CocycleMap:
    """The equivariant Phi over Z_p x_G Z_q whose twisted extension is the
    family member with these parameters."""
    if family == "uniconnected":
        xi = int(params["xi"]) % q
        gamma0 = [pow(xi, d, q) for d in range(p)]
        m = pq_module(p, q, r, gamma0)
        phi0 = np.asarray(params["phi0"], dtype=np.int64) % r
        vals = [int(phi0[y][b]) for y in range(p) for b in range(q)]
    elif family == "case1":
        gamma0 = check_gamma0(p, q, params["gamma0"])
        m = pq_module(p, q, r, gamma0)
        f1 = params["phi1"]
        f2 = params["phi2"]
        # Phi((x,a),(y,b)) = phi1(b - a) for x = y and phi2(x - y) otherwise
        vals = [int(f1[b]) % r if y == 0 else int(f2[(-y) % p - 1]) % r for y in range(p) for b in range(q)]
    elif family == "case2":
        d = case2_data(p, q, r, params["gamma0"], params["xi"], params["c"])
        gamma0 = d.gamma0
        m = pq_module(p, q, r, gamma0, d.xi)
        vals = [int(d.phi0[y][b]) for y in range(p) for b in range(q)]
    else:
        raise ValueError(f"unknown family {family}")
    return phi_from_phi0(0, m, vals)


def via_extension(family: str, p: int, q: int, r: int, **params) -> CycleSet:
    """Build the same parameters through phi_from_phi0 and twisted_extension."""
    y, _ = twisted_extension(pqr_cocycle(family, p, q, r, **params))
    return y


# ---------------------------------------------------------------- metadata

def describe(x: CycleSet, family: str, parameters: Mapping) -> dict:
    """Metadata for classify output. The socle order is |G(X)| / |G(X^(1))|,
    the order of the kernel of G(X) -> G(X^(1)), which is the socle."""
    order = cycle_set_group_order(x)
    quotient, _ = retraction(x)
    q_order = cycle_set_group_order(quotient)
    return {
        "family": family,
        "group_order": order,
        "mpl": mpl(x),
        "parameters": dict(parameters),
        "socle_order": order // q_order,
        "uniconnected": is_indecomposable(x) and order == x.n,
    }


# ---------------------------------------------------------------- enumeration

class _Classes:
    """Isomorphism classes bucketed by fingerprint multiset."""

    def __init__(self):
        self.buckets: dict[tuple, list[CycleSet]] = defaultdict(list)
        self.members: list[tuple[CycleSet, str, dict]] = []

    def add(self, x: CycleSet, family: str, params: dict) -> bool:
        key = tuple(sorted(_fingerprints(x)))
        for y in self.buckets[key]:
            if is_isomorphic(x, y) is not None:
                return False
        self.buckets[key].append(x)
        self.members.append((x, family, params))
        return True


def enumerate_pq(p: int, q: int) -> list[CycleSet]:
    """Indecomposable size-pq cycle sets with mpl 2, one per isomorphism class."""
    return [x for x, _, _ in enumerate_pq_detailed(p, q)]


def enumerate_pq_detailed(p: int, q: int) -> list[tuple[CycleSet, str, dict]]:
    _require_primes(p, q)
    from .oracle import canonical_form

    classes = _Classes()
    for m, k in ((p, q), (q, p)):
        for g in admissible_gamma0(m, k):
            x = build_pq(m, k, g)
            if not is_indecomposable(x) or mpl(x) != 2:
                raise InternalInvariantViolation(f"build_pq({m},{k},{g}) is not indecomposable of level 2")
            classes.add(x, "pq", {"m": m, "k": k, "gamma0": list(g)})
    members = classes.members
    keyed = [(canonical_form(x), x, fam, par) for x, fam, par in members]
    keyed.sort(key=lambda t: t[0])
    return [(x, fam, par) for _, x, fam, par in keyed]


def _scaled_min(vec: Sequence[int], r: int) -> bool:
    """True when vec is the representative of its orbit under Z_r^* (first nonzero entry 1)."""
    nz = next((v for v in vec if v % r), None)
    return nz is not None and nz % r == 1


def _uniconnected_params(p, q, r) -> Iterator[tuple[str, int, int, int, dict]]:
    if (q - 1) % p:
        return
    for xi in range(2, q):
        if pow(xi, p, q) != 1:
            continue
        for flat in itertools.product(range(r), repeat=p * q):
            if not _scaled_min(flat, r) or len(set(flat)) == 1:
                continue
            yield "uniconnected", p, q, r, {"xi": xi, "phi0": [list(flat[i * q:(i + 1) * q]) for i in range(p)]}


def _case1_params(p, q, r) -> Iterator[tuple[str, int, int, int, dict]]:
    for g in admissible_gamma0(p, q):
        if is_character_proportional(g, p, q) is not None:
            continue
        for flat in itertools.product(range(r), repeat=q + p - 1):
            if not _scaled_min(flat, r):
                continue
            yield "case1", p, q, r, {"gamma0": list(g), "phi1": list(flat[:q]), "phi2": list(flat[q:])}


def _case2_params(p, q, r) -> Iterator[tuple[str, int, int, int, dict]]:
    if (r - 1) % q:
        return
    roots = sorted(v for v in range(1, r) if pow(v, q, r) == 1)
    for g in admissible_gamma0(p, q):
        if is_character_proportional(g, p, q) is not None:
            continue
        gn, _ = normalize_gamma0(g, p, q)
        k0 = KernelSpace(p, q, gn).K0
        for xi in itertools.product(roots, repeat=p - 1):
            nset = n_chi(k0, xi, p, q, r)
            if 0 in nset or not nset:
                continue
            for cv in itertools.product(range(r), repeat=len(nset)):
                if not _scaled_min(cv, r):
                    continue
                yield "case2", p, q, r, {"gamma0": list(g), "xi": list(xi), "c": dict(zip(nset, cv))}


def _round_robin(gens: Iterable[Iterator]) -> Iterator:
    active = list(gens)
    while active:
        nxt = []
        for it in active:
            try:
                yield next(it)
            except StopIteration:
                continue
            nxt.append(it)
        active = nxt


def build_family(family: str, p: int, q: int, r: int, params: Mapping) -> CycleSet:
    if family == "uniconnected":
        return build_pqr_uniconnected(p, q, r, params["xi"], params["phi0"])
    if family == "case1":
        return build_pqr_case1(p, q, r, params["gamma0"], params["phi1"], params["phi2"])
    if family == "case2":
        return build_pqr_case2(p, q, r, params["gamma0"], params["xi"], params["c"])
    raise ValueError(f"unknown family {family}")


def pqr_candidates(p: int, q: int, r: int) -> Iterator[tuple[str, int, int, int, dict]]:
    """Raw parameter tuples over every assignment of the primes, interleaved
    so that a small budget still reaches every family."""
    streams = []
    for a, b, c in itertools.permutations(sorted((p, q, r))):
        streams += [_uniconnected_params(a, b, c), _case1_params(a, b, c), _case2_params(a, b, c)]
    return _round_robin(streams)


def post_check(x: CycleSet, p: int, q: int, r: int) -> dict:
    """Checks applied to every pqr output; raises on failure."""
    n = p * q * r
    problems = []
    if x.n != n:
        problems.append("size")
    if not is_indecomposable(x):
        problems.append("indecomposable")
    level = mpl(x)
    if not level <= 3:
        problems.append("mpl")
    quotient, proj = retraction(x)
    # members of lower level retract further (e.g. straight to Z_p)
    if level == 3 and quotient.n not in (p * q, q * r, p * r):
        problems.append("retraction_size")
    if quotient.n >= n or n % quotient.n:
        problems.append("retraction_size")
    order = cycle_set_group_order(x)
    if set(primes_of(order)) != {p, q, r}:
        problems.append("prime_divisors")
    if not is_coprime_extension(proj, limit=10 ** 6):
        problems.append("coprime_retraction")
    if problems:
        raise InternalInvariantViolation(f"pqr output fails {problems}")
    return {"mpl": level, "group_order": order, "retraction_size": quotient.n}


def enumerate_pqr(p: int, q: int, r: int, budget: int = 200, detailed: bool = False) -> list:
    """Union of the three families, deduplicated by isomorphism search.

    Raises BudgetExceeded (with the classes found so far) when more than
    ``budget`` raw candidates would be needed.
    """
    _require_primes(p, q, r)
    classes = _Classes()
    used = 0
    exhausted = True
    for family, a, b, c, params in pqr_candidates(p, q, r):
        if used >= budget:
            exhausted = False
            break
        used += 1
        x = build_family(family, a, b, c, params)
        if classes.add(x, family, {"p": a, "q": b, "r": c, **params}):
            post_check(x, p, q, r)
    out = classes.members if detailed else [m[0] for m in classes.members]
    if not exhausted:
        raise BudgetExceeded(out, budget)
    return out


def tower_sizes(x: CycleSet) -> list[int]:
    return [y.n for y in retraction_tower(x)]


__all__ = [
    "AllCZero", "BadXi", "BothPhiZero", "BudgetExceeded", "CharacterProportional", "ConstantPhi0", "KernelSpace",
    "NoUnitValue", "NotGenerating", "NotInNChi", "Periodic", "TrivialChi", "WellDefinednessFailure",
    "admissible_gamma0", "build_family", "build_pq", "build_pqr_case1", "build_pqr_case2", "build_pqr_uniconnected",
    "case2_data", "chi_x", "cyclic_cycle_set", "describe", "enumerate_pq", "enumerate_pqr", "is_character_proportional",
    "n_chi", "normalize_gamma0", "phi_x0_map", "pq_module", "pqr_candidates", "pqr_cocycle", "tower_sizes", "via_extension",
]
