"""The permutation group G(X) of a cycle set and its brace structure.

Group elements are stored as rows of a uint8 array (one permutation of X
per row) in breadth-first order from the identity.  Composition is
``(g o h)(z) = g(h(z))``; the group is generated by lambda_x = sigma_x^{-1}.

The additive structure is obtained by closure from the generator rule
``g + lambda_y = g o lambda_{g^{-1}(y)}``.  Walking these additive steps
from the identity gives every element a coordinate vector in Z^k (one
coordinate per distinct lambda); the relations met along the way span a
lattice L, and the closure is accepted only if Z^k / L has exactly |G|
elements, each hit once, with every additive step acting as the matching
translation.  That makes (G, +) an abelian group by construction; the brace
axioms are then checked separately.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .core import CycleSet, inverse
from .lattice import Lattice, invariant_factors_from_counts, lcm, primes_of
from .report import Report

DEFAULT_LIMIT = 10 ** 6


class SizeLimitExceeded(RuntimeError):
    pass


class ClosureInconsistency(RuntimeError):
    pass


class InternalInvariantViolation(AssertionError):
    """A property guaranteed by theory failed; signals a bug or invalid input."""


# ---------------------------------------------------------------- lookup

class PermIndex:
    """Exact row lookup for a set of permutations.

    Rows are keyed by their images on a base (points whose images determine a
    group element); keys are kept sorted for vectorized search, and each hit
    is confirmed against the full row.
    """

    def __init__(self, elements: np.ndarray):
        self.elements = elements
        n_el, n = elements.shape
        self.base = self._find_base(elements)
        self._dict = None
        if n > 1 and float(n) ** len(self.base) >= 2.0 ** 62:
            self._dict = {elements[i].tobytes(): i for i in range(n_el)}
            return
        keys = self._keys(elements)
        self.order = np.argsort(keys, kind="stable")
        self.sorted_keys = keys[self.order]
        if n_el > 1 and np.any(self.sorted_keys[1:] == self.sorted_keys[:-1]):
            raise InternalInvariantViolation("base does not separate the elements")

    @staticmethod
    def _find_base(elements: np.ndarray) -> list[int]:
        n_el, n = elements.shape
        ident = np.arange(n, dtype=elements.dtype)
        mask = np.ones(n_el, dtype=bool)
        base: list[int] = []
        while True:
            sub = elements[mask]
            moved = sub != ident
            rows = np.nonzero(moved.any(axis=1))[0]
            if len(rows) == 0:
                return base
            b = int(np.argmax(moved[rows[0]]))
            base.append(b)
            mask &= elements[:, b] == b

    def _keys(self, rows: np.ndarray) -> np.ndarray:
        n = rows.shape[1]
        key = np.zeros(len(rows), dtype=np.int64)
        for b in self.base:
            key = key * n + rows[:, b].astype(np.int64)
        return key

    def lookup(self, rows: np.ndarray) -> np.ndarray:
        """Indices of the given rows (-1 where a row is not an element)."""
        rows = np.asarray(rows)
        if rows.ndim == 1:
            rows = rows[None, :]
        if self._dict is not None:
            r = rows.astype(self.elements.dtype)
            return np.array([self._dict.get(r[i].tobytes(), -1) for i in range(len(r))], dtype=np.int64)
        keys = self._keys(rows)
        pos = np.searchsorted(self.sorted_keys, keys)
        pos = np.minimum(pos, len(self.sorted_keys) - 1)
        idx = self.order[pos].astype(np.int64)
        hit = (self.sorted_keys[pos] == keys)
        hit &= (self.elements[idx] == rows).all(axis=1)
        return np.where(hit, idx, -1)


# ---------------------------------------------------------------- groups

@dataclass(eq=False)
class PermutationGroup:
    """A finite permutation group listed element by element.

    ``elements[i] = elements[parent[i]] o generators[via[i]]`` for i > 0 and
    row 0 is the identity.
    """

    elements: np.ndarray
    generators: np.ndarray
    parent: np.ndarray
    via: np.ndarray

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def degree(self) -> int:
        return self.elements.shape[1]

    @cached_property
    def index(self) -> PermIndex:
        return PermIndex(self.elements)

    def find(self, rows) -> np.ndarray:
        return self.index.lookup(np.asarray(rows))

    def find_one(self, perm: Sequence[int]) -> int:
        return int(self.find(np.asarray(perm, dtype=np.int64)[None, :])[0])

    def perm(self, i: int) -> tuple[int, ...]:
        return tuple(int(v) for v in self.elements[i])

    @cached_property
    def inverse_rows(self) -> np.ndarray:
        return np.argsort(self.elements, axis=1).astype(self.elements.dtype)

    @cached_property
    def inverses(self) -> np.ndarray:
        idx = self.find(self.inverse_rows)
        if (idx < 0).any():
            raise InternalInvariantViolation("element inverse missing from the group")
        return idx

    def compose_rows(self, i, j) -> np.ndarray:
        """Rows of e_i o e_j for index arrays i, j (broadcast)."""
        a = self.elements[np.asarray(i)]
        b = self.elements[np.asarray(j)]
        return np.take_along_axis(a, b.astype(np.intp), axis=-1)

    def mul(self, i, j):
        """Index of e_i o e_j (vectorized over index arrays)."""
        i_arr = np.atleast_1d(np.asarray(i))
        j_arr = np.atleast_1d(np.asarray(j))
        i_arr, j_arr = np.broadcast_arrays(i_arr, j_arr)
        out = self.find(self.compose_rows(i_arr.ravel(), j_arr.ravel())).reshape(i_arr.shape)
        if np.ndim(i) == 0 and np.ndim(j) == 0:
            return int(out.ravel()[0])
        return out

    def word(self, i: int) -> list[int]:
        """Generator indices w with e_i = gens[w[0]] o gens[w[1]] o ..."""
        out = []
        while i > 0:
            out.append(int(self.via[i]))
            i = int(self.parent[i])
        return out[::-1]

    def stabilizer(self, point: int) -> np.ndarray:
        return np.nonzero(self.elements[:, point] == point)[0]

    def orbit(self, point: int) -> list[int]:
        return sorted(set(int(v) for v in self.elements[:, point]))


def generate(gens: Iterable[Sequence[int]], degree: int, limit: int = DEFAULT_LIMIT) -> PermutationGroup:
    """Closure of the given permutations under composition."""
    rows = np.array([list(g) for g in gens], dtype=np.int64).reshape(-1, degree)
    if degree > 255:
        raise ValueError("degree above 255 is not supported")
    elements, parent, via, complete = kernels.closure(rows.astype(np.uint8), limit)
    if not complete:
        raise SizeLimitExceeded(f"group closure exceeds {limit} elements")
    return PermutationGroup(elements, rows.astype(np.uint8), parent, via)


# ---------------------------------------------------------------- G(X)

@dataclass(eq=False)
class CycleSetGroup:
    """G(X) with the bookkeeping that ties it to X.

    ``cls[x]`` is the retraction class of x (classes numbered by first
    occurrence) and generator r of the group is lambda of class r.
    """

    X: CycleSet
    group: PermutationGroup
    cls: np.ndarray
    reps: list[int]

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def gen(self) -> list[int]:
        """Index of lambda_x in the element list, for each x."""
        return [self._gen_index[c] for c in self.cls]

    @cached_property
    def _gen_index(self) -> list[int]:
        return [self.group.find_one(g) for g in self.group.generators]

    @cached_property
    def lam_rows(self) -> np.ndarray:
        """lambda_x as rows, one per x."""
        return np.array([inverse(self.X.table[x]) for x in range(self.X.n)], dtype=np.intp)


def retraction_classes(x: CycleSet) -> tuple[np.ndarray, list[int]]:
    seen: dict[tuple[int, ...], int] = {}
    cls = []
    reps = []
    for i, row in enumerate(x.table):
        if row not in seen:
            seen[row] = len(reps)
            reps.append(i)
        cls.append(seen[row])
    return np.array(cls, dtype=np.int64), reps


def permutation_group(x: CycleSet, limit: int = DEFAULT_LIMIT) -> CycleSetGroup:
    """G(X) = <sigma_x>, listed by breadth-first closure."""
    cls, reps = retraction_classes(x)
    gens = [inverse(x.table[r]) for r in reps]
    group = generate(gens, x.n, limit)
    return CycleSetGroup(x, group, cls, reps)


def group_order(x: CycleSet, limit: int = DEFAULT_LIMIT) -> int:
    return permutation_group(x, limit).order


def fundamental_group(x: CycleSet, x0: int, g: CycleSetGroup | None = None) -> np.ndarray:
    """Indices of the point stabilizer of x0 in G(X)."""
    g = permutation_group(x) if g is None else g
    return g.group.stabilizer(x0)


# ---------------------------------------------------------------- brace

class PermutationBrace:
    """G(X) with its addition, lambda-action and socle."""

    def __init__(self, g: CycleSetGroup):
        self.G = g
        self.X = g.X
        grp = g.group
        n_el = grp.order
        k = len(g.reps)
        self.rank = k
        elements = grp.elements
        inv_rows = grp.inverse_rows
        lam = g.lam_rows
        cls = g.cls

        # functoriality: each g^{-1} maps retraction classes to classes, so the
        # rule gives the same sum for every y in a class
        img = cls[inv_rows.astype(np.intp)]
        rep_img = img[:, g.reps][:, cls]
        bad = np.nonzero((img != rep_img).any(axis=1))[0]
        if len(bad):
            raise ClosureInconsistency(f"g + lambda_y depends on the class representative (element {bad[0]})")

        # additive steps: step[g, r] = g + lambda_{reps[r]}
        step = np.empty((n_el, k), dtype=np.int64)
        for r, y in enumerate(g.reps):
            z = inv_rows[:, y].astype(np.intp)
            rows = np.take_along_axis(elements, lam[z], axis=1)
            step[:, r] = grp.find(rows)
        if (step < 0).any():
            i, r = np.argwhere(step < 0)[0]
            raise ClosureInconsistency(f"g + lambda_y leaves the group (element {i}, class {r})")
        self.step = step

        # breadth-first additive walk from 0 assigns coordinate vectors
        coords = np.full((n_el, k), -1, dtype=np.int64)
        coords[0] = 0
        reached = np.zeros(n_el, dtype=bool)
        reached[0] = True
        frontier = np.array([0], dtype=np.int64)
        eye = np.eye(k, dtype=np.int64)
        while len(frontier):
            new = []
            for r in range(k):
                tgt = step[frontier, r]
                fresh = ~reached[tgt]
                if fresh.any():
                    t, first = np.unique(tgt[fresh], return_index=True)
                    src = frontier[fresh][first]
                    coords[t] = coords[src] + eye[r]
                    reached[t] = True
                    new.append(t)
            frontier = np.concatenate(new) if new else np.array([], dtype=np.int64)
        if not reached.all():
            raise ClosureInconsistency("the additive closure of the generators misses elements")

        # relations from every additive step, reduced into a lattice
        lat = Lattice(k)
        chunk = max(1, 2_000_000 // max(k, 1))
        for r in range(k):
            for s in range(0, n_el, chunk):
                rel = coords[s:s + chunk] + eye[r] - coords[step[s:s + chunk, r]]
                red = lat.reduce(rel)
                nz = np.nonzero(red.any(axis=1))[0]
                while len(nz):
                    lat.insert(red[nz[0]])
                    red = lat.reduce(red[nz])
                    nz = np.nonzero(red.any(axis=1))[0]
        if not lat.full_rank or lat.index != n_el:
            raise ClosureInconsistency(f"additive relations give a group of order {lat.index}, expected {n_el}")
        self.lattice = lat
        self.coords = lat.reduce(coords)
        keys = lat.keys(self.coords)
        key_to_index = np.full(n_el, -1, dtype=np.int64)
        key_to_index[keys] = np.arange(n_el)
        if (key_to_index < 0).any():
            raise ClosureInconsistency("two elements share additive coordinates")
        self._key_to_index = key_to_index

    # -- basic operations (all vectorized over index arrays)

    @property
    def order(self) -> int:
        return self.G.order

    @property
    def identity(self) -> int:
        return 0

    @property
    def elements(self) -> np.ndarray:
        return self.G.group.elements

    @property
    def gen(self) -> list[int]:
        return self.G.gen

    def _from_vectors(self, vs: np.ndarray) -> np.ndarray:
        red = self.lattice.reduce(vs)
        return self._key_to_index[self.lattice.keys(red)]

    def add(self, a, b):
        a_arr, b_arr = np.broadcast_arrays(np.atleast_1d(a), np.atleast_1d(b))
        out = self._from_vectors(self.coords[a_arr.ravel()] + self.coords[b_arr.ravel()]).reshape(a_arr.shape)
        return int(out.ravel()[0]) if np.ndim(a) == 0 and np.ndim(b) == 0 else out

    def neg(self, a):
        a_arr = np.atleast_1d(a)
        out = self._from_vectors(-self.coords[a_arr.ravel()]).reshape(a_arr.shape)
        return int(out.ravel()[0]) if np.ndim(a) == 0 else out

    def sub(self, a, b):
        a_arr, b_arr = np.broadcast_arrays(np.atleast_1d(a), np.atleast_1d(b))
        out = self._from_vectors(self.coords[a_arr.ravel()] - self.coords[b_arr.ravel()]).reshape(a_arr.shape)
        return int(out.ravel()[0]) if np.ndim(a) == 0 and np.ndim(b) == 0 else out

    def mul(self, a, b):
        return self.G.group.mul(a, b)

    def inv(self, a):
        out = self.G.group.inverses[np.asarray(a)]
        return int(out) if np.ndim(a) == 0 else out

    def lam(self, a, b):
        """lambda_a(b) = a o b - a."""
        return self.sub(self.mul(a, b), a)

    def multiple(self, m: int, a):
        a_arr = np.atleast_1d(a)
        out = self._from_vectors(m * self.coords[a_arr.ravel()]).reshape(a_arr.shape)
        return int(out.ravel()[0]) if np.ndim(a) == 0 else out

    @cached_property
    def additive_orders(self) -> np.ndarray:
        """Additive order of every element."""
        n_el = self.order
        out = np.ones(n_el, dtype=np.int64)
        for p in primes_of(n_el):
            e = 0
            t = n_el
            while t % p == 0:
                t //= p
                e += 1
            rest = n_el // p ** e
            base = self.lattice.reduce(rest * self.coords)
            part = np.ones(n_el, dtype=np.int64)
            alive = base.any(axis=1)
            m = 1
            for _ in range(e):
                if not alive.any():
                    break
                m *= p
                part[alive] = m
                alive = self.lattice.reduce(m * base).any(axis=1)
            out *= part
        return out

    @cached_property
    def invariant_factors(self) -> list[int]:
        if self.order == 1:
            return []
        orders = self.additive_orders
        return invariant_factors_from_counts(self.order, lambda m: int(np.count_nonzero(m % orders == 0)))

    @property
    def exponent(self) -> int:
        out = 1
        for o in set(int(v) for v in self.additive_orders):
            out = lcm(out, o)
        return out

    def add_table(self, limit: int = 4000) -> np.ndarray:
        if self.order > limit:
            raise SizeLimitExceeded(f"addition table for {self.order} elements exceeds {limit}")
        idx = np.arange(self.order)
        return self.add(idx[:, None], idx[None, :])

    def mult_table(self, limit: int = 4000) -> np.ndarray:
        if self.order > limit:
            raise SizeLimitExceeded(f"multiplication table for {self.order} elements exceeds {limit}")
        idx = np.arange(self.order)
        return self.mul(idx[:, None], idx[None, :])

    @cached_property
    def gen_step(self) -> np.ndarray:
        """gen_step[a, r] = a o lambda_{reps[r]} (right Cayley graph)."""
        grp = self.G.group
        lam = self.G.lam_rows
        out = np.empty_like(self.step)
        for r, y in enumerate(self.G.reps):
            out[:, r] = grp.find(grp.elements[:, lam[y]])
        return out


def brace_structure(x: CycleSet | CycleSetGroup, limit: int = DEFAULT_LIMIT,
                    verify: bool = True, rng: random.Random | None = None) -> PermutationBrace:
    g = x if isinstance(x, CycleSetGroup) else permutation_group(x, limit)
    b = PermutationBrace(g)
    if verify:
        rep = verify_brace(b, rng=rng)
        if not rep.ok:
            raise ClosureInconsistency(f"brace invariants fail: {rep.witnesses}")
    return b


def _triples(n_el: int, exhaustive_upto: int, samples: int, rng: random.Random):
    if n_el <= exhaustive_upto:
        idx = np.arange(n_el)
        a, b, c = np.meshgrid(idx, idx, idx, indexing="ij")
        return a.ravel(), b.ravel(), c.ravel(), True
    draw = np.random.default_rng(rng.getrandbits(64)).integers(0, n_el, size=(samples, 3))
    return draw[:, 0], draw[:, 1], draw[:, 2], False


class _TableOps:
    """Brace operations by lookup in precomputed tables, for small braces."""

    def __init__(self, b: PermutationBrace):
        self.X = b.X
        self.gen = b.gen
        self.order = b.order
        self._add = b.add_table(limit=b.order)
        self._mul = b.mult_table(limit=b.order)
        self._neg = np.asarray(b.neg(np.arange(b.order)))

    def add(self, a, c):
        return self._add[a, c]

    def mul(self, a, c):
        return self._mul[a, c]

    def neg(self, a):
        return self._neg[a]

    def sub(self, a, c):
        return self._add[a, self._neg[c]]

    def lam(self, a, c):
        return self._add[self._mul[a, c], self._neg[a]]


def verify_brace(b: PermutationBrace, rng: random.Random | None = None,
                 exhaustive_pairs: int = 1000, exhaustive_lambda_pairs: int = 300, exhaustive_triples: int = 200,
                 samples: int = 10_000, table_limit: int = 500) -> Report:
    """Check the brace invariants: exhaustive on small braces, sampled above."""
    rng = random.Random(0) if rng is None else rng
    rep = Report()
    n_el = b.order
    rep.metrics["order"] = n_el
    b = _TableOps(b) if n_el <= table_limit else b

    # generator rule lambda_x + lambda_y = lambda_x o lambda_{lambda_x^{-1}(y)}
    X = b.X
    gen = b.gen
    xs = np.repeat(np.arange(X.n), X.n)
    ys = np.tile(np.arange(X.n), X.n)
    lhs = b.add(np.array(gen)[xs], np.array(gen)[ys])
    sig = X.array
    rhs = b.mul(np.array(gen)[xs], np.array(gen)[sig[xs, ys]])
    bad = np.nonzero(lhs != rhs)[0]
    rep.check("generator_rule", len(bad) == 0, (int(xs[bad[0]]), int(ys[bad[0]])) if len(bad) else None)

    if n_el <= exhaustive_pairs:
        idx = np.arange(n_el)
        pa, pb = [m.ravel() for m in np.meshgrid(idx, idx, indexing="ij")]
    else:
        pa, pb = np.random.default_rng(rng.getrandbits(64)).integers(0, n_el, size=(2, samples))
    bad = np.nonzero(b.add(pa, pb) != b.add(pb, pa))[0]
    rep.check("commutative", len(bad) == 0, (int(pa[bad[0]]), int(pb[bad[0]])) if len(bad) else None)
    bad = np.nonzero(b.add(pa, b.neg(pa)) != 0)[0]
    rep.check("inverse", len(bad) == 0, int(pa[bad[0]]) if len(bad) else None)
    # lambda is a homomorphism (B, o) -> Aut(B, +): lambda_{ab}(c) = lambda_a(lambda_b(c))
    if n_el > exhaustive_lambda_pairs:
        pa, pb = np.random.default_rng(rng.getrandbits(64)).integers(0, n_el, size=(2, samples))
    pc = np.random.default_rng(rng.getrandbits(64)).integers(0, n_el, size=len(pa))
    ab = b.mul(pa, pb)
    bad = np.nonzero(b.lam(ab, pc) != b.lam(pa, b.lam(pb, pc)))[0]
    rep.check("lambda_homomorphism", len(bad) == 0,
              (int(pa[bad[0]]), int(pb[bad[0]]), int(pc[bad[0]])) if len(bad) else None)

    ta, tb, tc, full = _triples(n_el, exhaustive_triples, samples, rng)
    bad = np.nonzero(b.add(b.add(ta, tb), tc) != b.add(ta, b.add(tb, tc)))[0]
    rep.check("associative", len(bad) == 0, (int(ta[bad[0]]), int(tb[bad[0]]), int(tc[bad[0]])) if len(bad) else None)
    left = b.mul(ta, b.add(tb, tc))
    right = b.add(b.sub(b.mul(ta, tb), ta), b.mul(ta, tc))
    bad = np.nonzero(left != right)[0]
    rep.check("brace_axiom", len(bad) == 0, (int(ta[bad[0]]), int(tb[bad[0]]), int(tc[bad[0]])) if len(bad) else None)
    rep.metrics["triples_exhaustive"] = full
    rep.metrics["triples_checked"] = int(len(ta))
    return rep


def lambda_of(b: PermutationBrace, a: int, c: int) -> int:
    return b.lam(a, c)


def socle(b: PermutationBrace, full_check_limit: int = 1500) -> np.ndarray:
    """Soc(B) = {a : a o c = a + c for all c}, as sorted indices.

    The defining condition only needs checking on the additive generators
    lambda_y (lambda_a is additive); on small braces it is also checked
    against every c.  The result must agree with {g : sigma_{g(y)} = sigma_y
    for all y}.
    """
    by_gens = (b.gen_step == b.step).all(axis=1)
    cls = b.G.cls
    by_classes = (cls[b.elements.astype(np.intp)] == cls[None, :]).all(axis=1)
    if not np.array_equal(by_gens, by_classes):
        a = int(np.argmax(by_gens != by_classes))
        raise InternalInvariantViolation(f"socle characterizations disagree at element {a}")
    if b.order <= full_check_limit:
        idx = np.arange(b.order)
        full = (b.mul(idx[:, None], idx[None, :]) == b.add(idx[:, None], idx[None, :])).all(axis=1)
        if not np.array_equal(full, by_gens):
            a = int(np.argmax(full != by_gens))
            raise InternalInvariantViolation(f"socle differs from its definition at element {a}")
    return np.nonzero(by_gens)[0]


def pi_primary(b: PermutationBrace, primes: Iterable[int], verify: bool = True) -> np.ndarray:
    """Elements whose additive order only involves the given primes."""
    primes = set(primes)
    orders = b.additive_orders
    keep = np.array([set(primes_of(int(o))) <= primes for o in orders], dtype=bool)
    out = np.nonzero(keep)[0]
    if verify:
        _check_left_ideal(b, out)
    return out


def _check_left_ideal(b: PermutationBrace, members: np.ndarray, samples: int = 20000) -> None:
    mask = np.zeros(b.order, dtype=bool)
    mask[members] = True
    rng = random.Random(1)
    if len(members) ** 2 <= 10 ** 6:
        pa, pb = [m.ravel() for m in np.meshgrid(members, members, indexing="ij")]
    else:
        pa, pb = members[np.random.default_rng(rng.getrandbits(64)).integers(0, len(members), size=(2, samples))]
    if not mask[b.add(pa, pb)].all():
        raise InternalInvariantViolation("pi-primary part is not additively closed")
    gens = np.array(sorted(set(b.gen)))
    ga, gm = [m.ravel() for m in np.meshgrid(gens, members, indexing="ij")]
    if not mask[b.lam(ga, gm)].all():
        raise InternalInvariantViolation("pi-primary part is not lambda-invariant")


def verify_socle_conjugation(b: PermutationBrace, exhaustive: bool | None = None,
                             budget: int = 4_000_000) -> Report:
    """Check lambda_a(s) = a o s o a^{-1} for s in the socle.

    Exhaustive over all a when affordable, otherwise over the generators of
    (B, o): both sides are actions of (B, o) on the socle, so agreeing on
    generators means agreeing everywhere.
    """
    soc = socle(b)
    rep = Report()
    if exhaustive is None:
        exhaustive = b.order * len(soc) <= budget
    a_set = np.arange(b.order) if exhaustive else np.array(sorted(set(b.gen)))
    aa, ss = [m.ravel() for m in np.meshgrid(a_set, soc, indexing="ij")]
    lhs = b.lam(aa, ss)
    rhs = b.mul(b.mul(aa, ss), b.inv(aa))
    bad = np.nonzero(lhs != rhs)[0]
    rep.check("conjugation", len(bad) == 0, (int(aa[bad[0]]), int(ss[bad[0]])) if len(bad) else None)
    rep.metrics.update({"mode": "exhaustive" if exhaustive else "generators",
                        "pairs": int(len(aa)), "socle_order": int(len(soc))})
    return rep
