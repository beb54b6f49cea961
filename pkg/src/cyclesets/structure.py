"""Retraction, multipermutation level, homomorphisms, isomorphism search and
zero-forcing sets."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from . import modp
from .brace import (DEFAULT_LIMIT, InternalInvariantViolation, brace_structure, permutation_group,
                    retraction_classes, socle)
from .core import CycleSet, CycleSetError, cycle_type, cycles, inverse, square_map, validate_cycle_set
from .report import Report


class NotHomomorphism(CycleSetError):
    pass


class NotSurjective(CycleSetError):
    pass


class TargetDecomposable(CycleSetError):
    pass


class UnequalFibers(CycleSetError):
    pass


@dataclass(frozen=True)
class CycleSetHom:
    """f: source -> target with f(x * y) = f(x) * f(y), checked on construction."""

    source: CycleSet
    target: CycleSet
    map: tuple[int, ...]

    def __post_init__(self):
        f = tuple(int(v) for v in self.map)
        object.__setattr__(self, "map", f)
        if len(f) != self.source.n or any(not 0 <= v < self.target.n for v in f):
            raise NotHomomorphism("map must send every source point into the target")
        s, t = self.source.array, self.target.array
        fa = np.asarray(f, dtype=np.int64)
        bad = np.argwhere(fa[s] != t[fa[:, None], fa[None, :]])
        if len(bad):
            x, y = (int(v) for v in bad[0])
            raise NotHomomorphism(f"f({x}*{y}) != f({x})*f({y})")

    def __call__(self, x: int) -> int:
        return self.map[x]

    @property
    def surjective(self) -> bool:
        return len(set(self.map)) == self.target.n

    def fibers(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.target.n)]
        for x, v in enumerate(self.map):
            out[v].append(x)
        return out


def identity_hom(x: CycleSet) -> CycleSetHom:
    return CycleSetHom(x, x, tuple(range(x.n)))


# ---------------------------------------------------------------- retraction

def retraction(x: CycleSet) -> tuple[CycleSet, CycleSetHom]:
    """Quotient by equal rows, classes numbered by first occurrence."""
    cls, reps = retraction_classes(x)
    k = len(reps)
    table = [[int(cls[x.table[a][b]]) for b in reps] for a in reps]
    for a in range(x.n):
        for b in range(x.n):
            if table[cls[a]][cls[b]] != cls[x.table[a][b]]:
                raise InternalInvariantViolation(f"retraction not well defined at ({a}, {b})")
    try:
        quotient = validate_cycle_set(table)
    except CycleSetError as exc:
        raise InternalInvariantViolation(f"retraction is not a cycle set: {exc}") from exc
    assert quotient.n == k
    return quotient, CycleSetHom(x, quotient, tuple(int(c) for c in cls))


def retraction_tower(x: CycleSet) -> list[CycleSet]:
    """X, X^(1), X^(2), ... until a point or a fixed size."""
    tower = [x]
    while tower[-1].n > 1:
        nxt, _ = retraction(tower[-1])
        if nxt.n == tower[-1].n:
            break
        tower.append(nxt)
    return tower


def mpl(x: CycleSet) -> int | float:
    """Multipermutation level; math.inf when the retractions stop above size 1."""
    tower = retraction_tower(x)
    if tower[-1].n > 1:
        return math.inf
    return len(tower) - 1


def orbit(x: CycleSet, start: int = 0) -> list[int]:
    """Orbit of a point under the group generated by all sigma_x."""
    rows = {row for row in x.table}
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for row in rows:
            w = row[v]
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return sorted(seen)


def is_indecomposable(x: CycleSet) -> bool:
    return len(orbit(x, 0)) == x.n


def is_uniconnected(x: CycleSet, limit: int = DEFAULT_LIMIT) -> bool:
    return is_indecomposable(x) and permutation_group(x, limit).order == x.n


# ---------------------------------------------------------------- extensions

def is_extension(f: CycleSetHom) -> bool:
    """True when sigma is constant on the fibers of f."""
    if not f.surjective:
        raise NotSurjective("extension maps must be surjective")
    if not is_indecomposable(f.target):
        raise TargetDecomposable("the target must be indecomposable")
    return all(len({f.source.table[y] for y in fib}) == 1 for fib in f.fibers())


def is_coprime_extension(f: CycleSetHom, limit: int = DEFAULT_LIMIT) -> bool:
    if not is_extension(f):
        return False
    sizes = {len(fib) for fib in f.fibers()}
    if len(sizes) != 1:
        raise UnequalFibers(f"fiber sizes {sorted(sizes)} differ")
    ratio = f.source.n // f.target.n
    return math.gcd(permutation_group(f.target, limit).order, ratio) == 1


# ---------------------------------------------------------------- isomorphism

def _fingerprints(x: CycleSet) -> list[tuple]:
    n = x.n
    row_count = Counter(x.table)
    sq = square_map(x)
    sq_len = {}
    for c in cycles(sq):
        for v in c:
            sq_len[v] = len(c)
    base = []
    for v in range(n):
        row = x.table[v]
        own = next(len(c) for c in cycles(row) if v in c)
        base.append((cycle_type(row), row_count[row], own, sq_len[v]))
    # one refinement round: what each element sees through its row and column
    return [
        (base[v], tuple(sorted(Counter((base[w], base[x.table[v][w]], base[x.table[w][v]]) for w in range(n)).items())))
        for v in range(n)
    ]


def _search(x: CycleSet, y: CycleSet, allowed: Callable[[int, int], bool]) -> tuple[int, ...] | None:
    """Backtracking for a table-preserving bijection x -> y.

    Assigning a point forces the images of all products with already
    assigned points; a full assignment that survives propagation preserves
    every product, since each pair is checked when its later point lands.
    """
    n = x.n
    if n != y.n:
        return None
    tx, ty = x.table, y.table
    fx, fy = _fingerprints(x), _fingerprints(y)
    if sorted(fx) != sorted(fy):
        return None
    cand = [[w for w in range(n) if fx[v] == fy[w] and allowed(v, w)] for v in range(n)]
    if any(not c for c in cand):
        return None
    fwd = [-1] * n
    back = [-1] * n
    placed: list[int] = []

    def assign(v: int, w: int, trail: list[int]) -> bool:
        queue = [(v, w)]
        while queue:
            a, b = queue.pop()
            if fwd[a] == b:
                continue
            if fwd[a] != -1 or back[b] != -1 or fx[a] != fy[b] or not allowed(a, b):
                return False
            fwd[a] = b
            back[b] = a
            trail.append(a)
            placed.append(a)
            for c in placed:
                d = fwd[c]
                queue.append((tx[a][c], ty[b][d]))
                queue.append((tx[c][a], ty[d][b]))
        return True

    def undo(trail: list[int]) -> None:
        for a in reversed(trail):
            back[fwd[a]] = -1
            fwd[a] = -1
            placed.pop()

    def rec() -> bool:
        if len(placed) == n:
            return True
        best, options = None, None
        for v in range(n):
            if fwd[v] != -1:
                continue
            opts = [w for w in cand[v] if back[w] == -1]
            if options is None or len(opts) < len(options):
                best, options = v, opts
                if len(opts) <= 1:
                    break
        for w in options:
            trail: list[int] = []
            if assign(best, w, trail) and rec():
                return True
            undo(trail)
        return False

    if not rec():
        return None
    iso = tuple(fwd)
    if any(iso[tx[a][b]] != ty[iso[a]][iso[b]] for a in range(n) for b in range(n)):
        raise InternalInvariantViolation("isomorphism search returned a non-isomorphism")
    return iso


def is_isomorphic(x: CycleSet, y: CycleSet) -> tuple[int, ...] | None:
    """A bijection f with f(a * b) = f(a) * f(b), or None."""
    return _search(x, y, lambda a, b: True)


def extensions_equivalent(f1: CycleSetHom, f2: CycleSetHom) -> tuple[int, ...] | None:
    """An isomorphism i of the sources with f1 = f2 o i, or None."""
    if f1.target.table != f2.target.table:
        raise ValueError("extensions must share the target")
    m1, m2 = f1.map, f2.map
    return _search(f1.source, f2.source, lambda a, b: m1[a] == m2[b])


# ---------------------------------------------------------------- zero forcing

@dataclass(frozen=True)
class ZeroForcingInstance:
    """Points {0..M-1}, functions H = span(H_gens) into Z_q, and a set N."""

    M: int
    q: int
    H_gens: tuple[tuple[int, ...], ...]
    N: frozenset[int]

    def __post_init__(self):
        gens = tuple(tuple(int(v) % self.q for v in g) for g in self.H_gens)
        if any(len(g) != self.M for g in gens):
            raise ValueError("generators must have one entry per point")
        object.__setattr__(self, "H_gens", gens)
        object.__setattr__(self, "N", frozenset(int(v) for v in self.N))


def vanishing_subspace(inst: ZeroForcingInstance) -> list[list[int]]:
    """Basis of {f in span(H_gens) : f|_N = 0}."""
    basis, _ = modp.rref(inst.H_gens, inst.q)
    if not basis:
        return []
    cols = sorted(inst.N)
    if not cols:
        return basis
    # coefficient vectors c with sum_i c_i basis_i vanishing on N
    restricted = [[b[j] for b in basis] for j in cols]
    coeffs = modp.nullspace(restricted, inst.q, width=len(basis))
    out = [[sum(c[i] * basis[i][k] for i in range(len(basis))) % inst.q for k in range(inst.M)] for c in coeffs]
    return modp.rref(out, inst.q)[0] if out else []


def zero_forcing(inst: ZeroForcingInstance) -> frozenset[int]:
    """Points where every f in H vanishing on N also vanishes."""
    sub = vanishing_subspace(inst)
    return frozenset(v for v in range(inst.M) if all(f[v] == 0 for f in sub))


# ---------------------------------------------------------------- checks

def stabilizer_orbits(x: CycleSet, x0: int = 0, limit: int = DEFAULT_LIMIT) -> list[list[int]]:
    g = permutation_group(x, limit).group
    stab = g.elements[g.stabilizer(x0)]
    seen: set[int] = set()
    out = []
    for v in range(x.n):
        if v in seen:
            continue
        orb = sorted(set(int(w) for w in stab[:, v]))
        seen.update(orb)
        out.append(orb)
    return out


def stabilizer_orbit_check(p: int, q: int, gamma0: Sequence[int]) -> Report:
    """Compare the orbits of the stabilizer of (0, 0) in Z_p x_G Z_q with the
    dichotomy: all singletons when gamma0 is a multiple of a character,
    otherwise singletons over 0 and full fibers elsewhere."""
    from .classify import build_pq, is_character_proportional

    x = build_pq(p, q, gamma0)
    orbits = stabilizer_orbits(x, 0)
    char = is_character_proportional(gamma0, p, q)
    if char is not None:
        expected = [[v] for v in range(p * q)]
    else:
        expected = [[a] for a in range(q)] + [[xx * q + a for a in range(q)] for xx in range(1, p)]
    rep = Report()
    rep.check("orbits", sorted(orbits) == sorted(expected), {"found": orbits, "expected": expected})
    rep.metrics.update({"p": p, "q": q, "gamma0": list(gamma0), "character": char is not None,
                        "orbit_sizes": sorted(len(o) for o in orbits)})
    return rep


def verify_soc_equals_ker_ret(x: CycleSet, limit: int = DEFAULT_LIMIT, full_brace_limit: int = 200_000) -> Report:
    """Kernel of G(X) -> G(X^(1)) against the socle.

    The induced map sends g to its action on retraction classes; it is checked
    to be well defined and to send lambda_y to lambda_[y].  The socle is taken
    from the brace when that is affordable, otherwise from the generator-level
    condition a o lambda_y = a + lambda_y = a o lambda_{a^{-1}(y)}.
    """
    rep = Report()
    g = permutation_group(x, limit)
    grp = g.group
    cls = g.cls
    reps = np.asarray(g.reps)
    els = grp.elements.astype(np.intp)
    img = cls[els[:, reps]]  # class permutation induced by each element
    full = cls[els]
    bad = np.nonzero((full != img[:, cls]).any(axis=1))[0]
    rep.check("well_defined", len(bad) == 0, int(bad[0]) if len(bad) else None)

    quotient, _ = retraction(x)
    q_lam = np.array([inverse(quotient.table[c]) for c in range(quotient.n)], dtype=np.int64)
    gens = [grp.find_one(inverse(x.table[r])) for r in g.reps]
    bad_gen = [r for r, i in zip(range(len(reps)), gens) if not np.array_equal(img[i], q_lam[r])]
    rep.check("generators_map_to_generators", not bad_gen, bad_gen[0] if bad_gen else None)

    kernel = np.nonzero((img == np.arange(len(reps))[None, :]).all(axis=1))[0]
    if grp.order <= full_brace_limit:
        soc = socle(brace_structure(g))
        mode = "brace"
    else:
        inv_cols = np.argsort(els, axis=1)[:, reps] if grp.order * x.n <= 5 * 10 ** 7 else _inverse_columns(els, reps)
        soc = np.nonzero((cls[inv_cols] == cls[reps][None, :]).all(axis=1))[0]
        mode = "generators"
    same = np.array_equal(np.sort(kernel), np.sort(soc))
    diff = sorted(set(kernel.tolist()) ^ set(soc.tolist()))
    rep.check("kernel_equals_socle", same, diff[0] if diff else None)
    rep.metrics.update({"group_order": grp.order, "kernel_order": int(len(kernel)),
                        "socle_order": int(len(soc)), "socle_mode": mode})
    return rep


def _inverse_columns(els: np.ndarray, points: np.ndarray, chunk: int = 200_000) -> np.ndarray:
    out = np.empty((len(els), len(points)), dtype=np.intp)
    for s in range(0, len(els), chunk):
        block = els[s:s + chunk]
        for j, p in enumerate(points):
            out[s:s + chunk, j] = np.argmax(block == p, axis=1)
    return out


@lru_cache(maxsize=None)
def _cached_group_order(table: tuple, limit: int) -> int:
    return permutation_group(CycleSet(table), limit).order


def group_order_cached(x: CycleSet, limit: int = DEFAULT_LIMIT) -> int:
    return _cached_group_order(x.table, limit)
