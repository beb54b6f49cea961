"""Graded modules over G(X), twisted and parallel extensions, and the
cocycle checks that go with them.

A graded module A = (+)_x A_x is stored through its scattering: the points
(x, a) with a in A_x, numbered x-major and then by the residue tuple of a in
row-major order.  Every group element then acts as a permutation of the
scatter points that maps the fiber over x additively onto the fiber over
lambda_g(x); the twisted extension is a cycle set on the same points.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence

import numpy as np

from .brace import (DEFAULT_LIMIT, CycleSetGroup, InternalInvariantViolation, SizeLimitExceeded, brace_structure,
                    generate, permutation_group, pi_primary)
from .core import CycleSet, CycleSetError, inverse, validate_cycle_set
from .lattice import primes_of
from .report import Report
from .structure import CycleSetHom, extensions_equivalent, is_indecomposable


class EquivarianceViolation(CycleSetError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"Phi is not equivariant at {witness}")


class InvarianceViolation(CycleSetError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"Gamma is not invariant at {witness}")


class NotPi1Equivariant(CycleSetError):
    pass


class WellDefinednessFailure(CycleSetError):
    pass


class CoprimalityViolation(CycleSetError):
    pass


class NotModuleIso(CycleSetError):
    pass


class NotApplicable(CycleSetError):
    """Raised when a check's preconditions do not hold for the input."""


class NoRepresentativeFound(RuntimeError):
    """No equivariant cocycle, or more than one, in a cohomology class."""


class InvalidModule(CycleSetError):
    def __init__(self, report: Report):
        self.report = report
        super().__init__(f"graded module is invalid: {report.witnesses}")


# ---------------------------------------------------------------- fibers

def _strides(orders: Sequence[int]) -> list[int]:
    out = [1] * len(orders)
    for i in range(len(orders) - 2, -1, -1):
        out[i] = out[i + 1] * orders[i + 1]
    return out


def _residues(orders: Sequence[int]) -> list[tuple[int, ...]]:
    return list(itertools.product(*[range(d) for d in orders]))


def _index(a: Sequence[int], orders: Sequence[int]) -> int:
    idx = 0
    for v, d in zip(a, orders):
        idx = idx * d + int(v) % d
    return idx


@dataclass(frozen=True)
class Fiber:
    """A finite abelian group Z_{d1} x ... x Z_{dk} with elements numbered
    row-major by residue tuple."""

    orders: tuple[int, ...]

    @property
    def size(self) -> int:
        return math.prod(self.orders)

    @cached_property
    def elements(self) -> list[tuple[int, ...]]:
        return _residues(self.orders)

    @cached_property
    def coords(self) -> np.ndarray:
        return np.array(self.elements, dtype=np.int64).reshape(self.size, len(self.orders))

    @cached_property
    def add(self) -> np.ndarray:
        c = self.coords
        s = (c[:, None, :] + c[None, :, :]) % np.array(self.orders, dtype=np.int64)
        return self._flat(s)

    @cached_property
    def neg(self) -> np.ndarray:
        return self._flat((-self.coords) % np.array(self.orders, dtype=np.int64))

    def _flat(self, c: np.ndarray) -> np.ndarray:
        key = np.zeros(c.shape[:-1], dtype=np.int64)
        for i, d in enumerate(self.orders):
            key = key * d + c[..., i]
        return key

    def index(self, a: Sequence[int]) -> int:
        if len(a) != len(self.orders):
            raise ValueError(f"expected {len(self.orders)} residues, got {list(a)}")
        return _index(a, self.orders)

    def apply_matrix(self, m: Sequence[Sequence[int]], target: "Fiber") -> np.ndarray | None:
        """Images of all elements under a -> m a; None if not well defined."""
        mat = np.array(m, dtype=np.int64).reshape(len(target.orders), len(self.orders))
        t_ord = np.array(target.orders, dtype=np.int64)
        # a homomorphism needs d_target_i | m_ij * d_source_j
        for j, d in enumerate(self.orders):
            if np.any((mat[:, j] * d) % t_ord):
                return None
        img = (self.coords @ mat.T) % t_ord if len(self.orders) else np.zeros((1, len(target.orders)), dtype=np.int64)
        return target._flat(img)

    def subgroup(self, gens: Sequence[int]) -> set[int]:
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = int(self.add[a, g])
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        return seen


# ---------------------------------------------------------------- graded modules

@dataclass(eq=False)
class GradedModule:
    """An X-graded G(X)-module.

    ``gen_maps[z][x]`` is the matrix of lambda_z: A_x -> A_{lambda_z(x)}
    acting on residue column vectors.  Points z with equal rows in X share
    their maps; it is enough to give one z per row class.
    """

    base: CycleSet
    components: tuple[tuple[int, ...], ...]
    gen_maps: dict[int, list]
    limit: int = DEFAULT_LIMIT
    _group: CycleSetGroup | None = field(default=None, repr=False)

    def __post_init__(self):
        self.components = tuple(tuple(int(d) for d in c) for c in self.components)
        if len(self.components) != self.base.n:
            raise ValueError("one component per base point is required")
        if any(d < 1 for c in self.components for d in c):
            raise ValueError("component orders must be positive")
        self.gen_maps = {int(z): list(v) for z, v in self.gen_maps.items()}

    @cached_property
    def group(self) -> CycleSetGroup:
        return self._group if self._group is not None else permutation_group(self.base, self.limit)

    @cached_property
    def fibers(self) -> list[Fiber]:
        return [Fiber(c) for c in self.components]

    @cached_property
    def offsets(self) -> np.ndarray:
        return np.concatenate([[0], np.cumsum([f.size for f in self.fibers])]).astype(np.int64)

    @property
    def size(self) -> int:
        return int(self.offsets[-1])

    @cached_property
    def fiber_of(self) -> np.ndarray:
        return np.repeat(np.arange(self.base.n), [f.size for f in self.fibers])

    @cached_property
    def local(self) -> np.ndarray:
        return np.arange(self.size) - self.offsets[self.fiber_of]

    def point(self, x: int, a) -> int:
        """Scatter index of (x, a); a is a residue tuple or a local index."""
        if isinstance(a, (int, np.integer)):
            return int(self.offsets[x] + a)
        return int(self.offsets[x] + self.fibers[x].index(a))

    def coords_of(self, pt: int) -> tuple[int, tuple[int, ...]]:
        x = int(self.fiber_of[pt])
        return x, self.fibers[x].elements[int(self.local[pt])]

    @cached_property
    def _class_maps(self) -> tuple[dict[int, np.ndarray], list]:
        """Scatter permutation for each row class, plus construction problems."""
        g = self.group
        lam = g.lam_rows
        problems = []
        by_class: dict[int, np.ndarray] = {}
        for z, mats in sorted(self.gen_maps.items()):
            if not 0 <= z < self.base.n:
                problems.append(("generator", z))
                continue
            if len(mats) != self.base.n:
                problems.append(("matrix_count", z))
                continue
            perm = np.full(self.size, -1, dtype=np.int64)
            for x in range(self.base.n):
                src, dst = self.fibers[x], self.fibers[int(lam[z][x])]
                if src.orders != dst.orders:
                    problems.append(("grading", z, x))
                    continue
                try:
                    img = src.apply_matrix(mats[x], dst)
                except ValueError:
                    img = None
                if img is None:
                    problems.append(("not_a_homomorphism", z, x))
                    continue
                perm[self.offsets[x]:self.offsets[x + 1]] = self.offsets[int(lam[z][x])] + img
            c = int(g.cls[z])
            if c in by_class and not np.array_equal(by_class[c], perm):
                problems.append(("inconsistent_generators", z))
            by_class.setdefault(c, perm)
        for c, r in enumerate(g.reps):
            if c not in by_class:
                problems.append(("missing_generator", r))
        return by_class, problems

    @cached_property
    def gen_perms(self) -> np.ndarray:
        """Scatter permutation of lambda_r for each row class r."""
        by_class, problems = self._class_maps
        if problems:
            raise InvalidModule(validate_graded_module(self))
        return np.array([by_class[c] for c in range(len(self.group.reps))], dtype=np.int64).reshape(-1, self.size)

    @cached_property
    def act(self) -> np.ndarray:
        """act[i] = scatter permutation of group element i."""
        grp = self.group.group
        gens = self.gen_perms
        out = np.empty((grp.order, self.size), dtype=np.int64)
        out[0] = np.arange(self.size)
        for i in range(1, grp.order):
            out[i] = out[grp.parent[i]][gens[grp.via[i]]]
        return out

    @cached_property
    def inv_gen_perms(self) -> np.ndarray:
        return np.argsort(self.gen_perms, axis=1)

    def gen_perm_of(self, z: int) -> np.ndarray:
        return self.gen_perms[self.group.cls[z]]

    def sigma_perm_of(self, z: int) -> np.ndarray:
        return self.inv_gen_perms[self.group.cls[z]]


def permutation_module(x: CycleSet, orders: Sequence[int], limit: int = DEFAULT_LIMIT) -> GradedModule:
    """B^X with g acting by moving coordinates: every map is the identity."""
    orders = tuple(int(d) for d in orders)
    eye = np.eye(len(orders), dtype=np.int64).tolist()
    _, reps = _reps(x)
    return GradedModule(x, tuple(orders for _ in range(x.n)), {r: [eye] * x.n for r in reps}, limit)


def scalar_module(x: CycleSet, r: int, scalars: Mapping[int, Sequence[int]], limit: int = DEFAULT_LIMIT) -> GradedModule:
    """Module with every A_x = Z_r and lambda_z acting on A_x by scalars[z][x]."""
    return GradedModule(x, tuple((r,) for _ in range(x.n)),
                        {z: [[[int(v) % r]] for v in vals] for z, vals in scalars.items()}, limit)


def _reps(x: CycleSet):
    seen = {}
    for i, row in enumerate(x.table):
        seen.setdefault(row, i)
    return len(seen), sorted(seen.values())


def validate_graded_module(m: GradedModule, samples: int = 200, rng: random.Random | None = None) -> Report:
    """Grading, invertibility and the homomorphism property of the action."""
    rep = Report()
    by_class, problems = m._class_maps
    kinds = {p[0] for p in problems}
    first = {k: next(p for p in problems if p[0] == k) for k in kinds}
    rep.check("grading", not kinds & {"grading", "matrix_count", "generator"},
              first.get("grading") or first.get("matrix_count") or first.get("generator"))
    rep.check("well_defined", "not_a_homomorphism" not in kinds, first.get("not_a_homomorphism"))
    rep.check("generators_consistent", not kinds & {"inconsistent_generators", "missing_generator"},
              first.get("inconsistent_generators") or first.get("missing_generator"))
    if problems:
        rep.check("invertible", False, "skipped: malformed maps")
        rep.check("homomorphism", False, "skipped: malformed maps")
        return rep
    gens = [by_class[c] for c in range(len(m.group.reps))]
    bad_inv = next((c for c, p in enumerate(gens) if len(set(p.tolist())) != m.size), None)
    rep.check("invertible", bad_inv is None, None if bad_inv is None else m.group.reps[bad_inv])
    if bad_inv is not None:
        rep.check("homomorphism", False, "skipped: non-invertible map")
        return rep
    # the action is a homomorphism iff the generated group is no larger than
    # G(X) (the projection onto X is onto, so equal order means isomorphic)
    order = m.group.order
    try:
        closure = generate([p.tolist() for p in gens], m.size, limit=order)
        ok = closure.order == order
    except SizeLimitExceeded:
        ok = False
    except ValueError:
        ok = None
    if ok is None:
        ok = _homomorphism_by_words(m, samples, rng)
    rep.check("homomorphism", ok, None if ok else "relations of G(X) fail on the module")
    if ok:
        act = m.act
        rng = random.Random(0) if rng is None else rng
        grp = m.group.group
        bad = None
        for _ in range(samples):
            i, j = rng.randrange(grp.order), rng.randrange(grp.order)
            k = grp.mul(i, j)
            if not np.array_equal(act[k], act[i][act[j]]):
                bad = (i, j)
                break
        rep.check("homomorphism_spot", bad is None, bad)
        rep.check("identity", np.array_equal(act[0], np.arange(m.size)), None)
    rep.metrics.update({"scatter_size": m.size, "group_order": order})
    return rep


def _homomorphism_by_words(m: GradedModule, samples: int, rng) -> bool:
    """Fallback for scatter sets above 255 points: compare along random words."""
    rng = random.Random(0) if rng is None else rng
    grp = m.group.group
    act = m.act
    for _ in range(samples):
        i, j = rng.randrange(grp.order), rng.randrange(grp.order)
        if not np.array_equal(act[grp.mul(i, j)], act[i][act[j]]):
            return False
    return True


# ---------------------------------------------------------------- cocycles

@dataclass(eq=False)
class CocycleMap:
    """Phi(x, y) in A_y, stored as local indices values[x, y]."""

    module: GradedModule
    values: np.ndarray

    def __post_init__(self):
        n = self.module.base.n
        v = np.asarray(self.values, dtype=np.int64)
        if v.shape != (n, n):
            raise ValueError("Phi needs one value per pair")
        sizes = np.array([f.size for f in self.module.fibers])
        if np.any(v < 0) or np.any(v >= sizes[None, :]):
            raise ValueError("Phi(x, y) must lie in A_y")
        self.values = v

    @classmethod
    def from_residues(cls, module: GradedModule, values) -> "CocycleMap":
        n = module.base.n
        idx = [[module.fibers[y].index(tuple(values[x][y])) if not isinstance(values[x][y], (int, np.integer))
                else int(values[x][y]) % module.fibers[y].size for y in range(n)] for x in range(n)]
        return cls(module, np.array(idx, dtype=np.int64))

    def residue(self, x: int, y: int) -> tuple[int, ...]:
        return self.module.fibers[y].elements[int(self.values[x, y])]

    def residues(self) -> list[list[list[int]]]:
        n = self.module.base.n
        return [[list(self.residue(x, y)) for y in range(n)] for x in range(n)]

    def points(self) -> np.ndarray:
        """Scatter index of (y, Phi(x, y)) for every pair."""
        return self.module.offsets[None, :-1] + self.values

    def scaled(self, k: int) -> "CocycleMap":
        m = self.module
        out = np.empty_like(self.values)
        for y, f in enumerate(m.fibers):
            out[:, y] = f._flat((f.coords[self.values[:, y]] * k) % np.array(f.orders))
        return CocycleMap(m, out)


def zero_cocycle(m: GradedModule) -> CocycleMap:
    return CocycleMap(m, np.zeros((m.base.n, m.base.n), dtype=np.int64))


def _act_values(m: GradedModule, perm: np.ndarray, ys: np.ndarray, vals: np.ndarray) -> np.ndarray:
    """Local index of g . a for a = vals in A_ys, under scatter permutation perm."""
    pts = perm[m.offsets[ys] + vals]
    return pts - m.offsets[m.fiber_of[pts]]


def equivariance_witness(phi: CocycleMap, full: bool = False):
    m = phi.module
    n = m.base.n
    lam = m.group.lam_rows
    xs, ys = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    if full:
        grp = m.group.group
        items = [(i, grp.elements[i].astype(np.intp), m.act[i]) for i in range(grp.order)]
    else:
        items = [(r, lam[r], m.gen_perm_of(r)) for r in m.group.reps]
    for g, lg, perm in items:
        left = phi.values[lg[xs], lg[ys]]
        right = _act_values(m, perm, ys, phi.values)
        bad = np.argwhere(left != right)
        if len(bad):
            return (int(g), int(bad[0][0]), int(bad[0][1]))
    return None


def check_equivariance(phi: CocycleMap, full: bool = False) -> bool:
    """Phi(lambda_g x, lambda_g y) = g . Phi(x, y) on generators (or all g)."""
    return equivariance_witness(phi, full) is None


def _twisted_table(phi: CocycleMap) -> np.ndarray:
    m = phi.module
    n = m.base.n
    size = m.size
    table = np.empty((size, size), dtype=np.int64)
    loc = m.local
    for x in range(n):
        sig = m.sigma_perm_of(x)
        shifted = np.empty(size, dtype=np.int64)
        for y in range(n):
            f = m.fibers[y]
            sl = slice(m.offsets[y], m.offsets[y + 1])
            shifted[sl] = m.offsets[y] + f.add[loc[sl], phi.values[x, y]]
        row = sig[shifted]
        table[m.offsets[x]:m.offsets[x + 1]] = row[None, :]
    return table


def twisted_extension(phi: CocycleMap, check: bool = True) -> tuple[CycleSet, CycleSetHom]:
    """(x, a) * (y, b) = sigma_x . (y, b + Phi(x, y)) with projection to X."""
    if check:
        w = equivariance_witness(phi)
        if w is not None:
            raise EquivarianceViolation(w)
    y = validate_cycle_set(_twisted_table(phi).tolist())
    pr = CycleSetHom(y, phi.module.base, tuple(int(v) for v in phi.module.fiber_of))
    return y, pr


def general_extension(phi: CocycleMap) -> CycleSet:
    """The same operation for any Phi; a cycle set iff Phi is a twisted cocycle."""
    return validate_cycle_set(_twisted_table(phi).tolist())


def indecomposability_criterion(phi: CocycleMap) -> bool:
    """A_{x0} = <Phi(x, x0) : x> (the answer is checked to agree for all x0)."""
    m = phi.module
    order = m.group.order
    for x, f in enumerate(m.fibers):
        if math.gcd(order, f.size) != 1:
            raise CoprimalityViolation(f"|G(X)| = {order} and |A_{x}| = {f.size} are not coprime")
    answers = []
    for x0, f in enumerate(m.fibers):
        sub = f.subgroup(sorted(set(int(v) for v in phi.values[:, x0])))
        answers.append(len(sub) == f.size)
    if is_indecomposable(m.base) and len(set(answers)) != 1:
        raise InternalInvariantViolation(f"criterion depends on the base point: {answers}")
    return answers[0]


# ---------------------------------------------------------------- parallel extensions

@dataclass(eq=False)
class GammaMap:
    """Gamma: X x X -> B with B = Z_{d1} x ... ; values as local indices."""

    base: CycleSet
    orders: tuple[int, ...]
    values: np.ndarray

    def __post_init__(self):
        self.orders = tuple(int(d) for d in self.orders)
        self.values = np.asarray(self.values, dtype=np.int64)
        n = self.base.n
        if self.values.shape != (n, n):
            raise ValueError("Gamma needs one value per pair")

    @classmethod
    def from_residues(cls, base: CycleSet, orders: Sequence[int], values) -> "GammaMap":
        orders = tuple(int(d) for d in orders)
        n = base.n
        idx = [[_index(values[x][y] if not isinstance(values[x][y], (int, np.integer)) else (values[x][y],), orders)
                for y in range(n)] for x in range(n)]
        return cls(base, orders, np.array(idx, dtype=np.int64))

    @property
    def fiber(self) -> Fiber:
        return Fiber(self.orders)


def invariance_witness(gamma: GammaMap):
    lam = [inverse(r) for r in gamma.base.table]
    seen = set()
    n = gamma.base.n
    xs, ys = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    for z in range(n):
        if gamma.base.table[z] in seen:
            continue
        seen.add(gamma.base.table[z])
        lz = np.asarray(lam[z])
        bad = np.argwhere(gamma.values[lz[xs], lz[ys]] != gamma.values)
        if len(bad):
            return (z, int(bad[0][0]), int(bad[0][1]))
    return None


def parallel_extension(gamma: GammaMap, check: bool = True) -> tuple[CycleSet, CycleSetHom]:
    """(x, a) * (y, b) = (x * y, b + Gamma(x, y)) on X x B, index x*|B| + a."""
    if check:
        w = invariance_witness(gamma)
        if w is not None:
            raise InvarianceViolation(w)
    x = gamma.base
    f = gamma.fiber
    k = f.size
    t = x.array
    a = np.arange(k)
    table = (t[:, None, :, None] * k + f.add[a[None, None, None, :], gamma.values[:, None, :, None]])
    table = np.broadcast_to(table, (x.n, k, x.n, k)).reshape(x.n * k, x.n * k)
    y = validate_cycle_set(table.tolist())
    return y, CycleSetHom(y, x, tuple(i // k for i in range(x.n * k)))


def abelian_extension_witness(y: CycleSet, orders: Sequence[int]):
    """First (u, z, a) with u * (z + a) != (u * z) + a, where B = Z_{d1} x ...
    acts on Y = X x B (index x*|B| + b) by translation in the second factor."""
    f = Fiber(tuple(int(d) for d in orders))
    k = f.size
    if y.n % k:
        raise ValueError("|Y| is not a multiple of |B|")
    pts = np.arange(y.n)
    t = y.array
    for a in range(k):
        shift = (pts // k) * k + f.add[pts % k, a]
        bad = np.argwhere(t[:, shift] != shift[t])
        if len(bad):
            return int(bad[0][0]), int(bad[0][1]), a
    return None


def is_abelian_extension(y: CycleSet, orders: Sequence[int]) -> bool:
    return abelian_extension_witness(y, orders) is None


def gamma_to_cocycle(gamma: GammaMap, module: GradedModule | None = None) -> CocycleMap:
    m = permutation_module(gamma.base, gamma.orders) if module is None else module
    return CocycleMap(m, gamma.values.copy())


# ---------------------------------------------------------------- base-point data

def phi_from_phi0(x0: int, module: GradedModule, phi0: Sequence[int]) -> CocycleMap:
    """Extend Phi0 (local indices, Phi0(y) in A_y) to an equivariant Phi by
    Phi(lambda_g(x0), y) = g . Phi0(lambda_g^{-1}(y))."""
    m = module
    base = m.base
    if not is_indecomposable(base):
        raise ValueError("the base must be indecomposable")
    n = base.n
    p0 = np.asarray(phi0, dtype=np.int64)
    if p0.shape != (n,):
        raise ValueError("Phi0 needs one value per point")
    grp = m.group.group
    els = grp.elements.astype(np.intp)
    act = m.act
    ys = np.arange(n)
    for i in grp.stabilizer(x0):
        left = p0[els[i]]
        right = _act_values(m, act[i], ys, p0)
        # Phi0(g y) must equal g . Phi0(y)
        bad = np.nonzero(left != right)[0]
        if len(bad):
            raise NotPi1Equivariant(f"stabilizer element {int(i)} breaks Phi0 at y={int(bad[0])}")
    values = np.full((n, n), -1, dtype=np.int64)
    witness = np.full(n, -1, dtype=np.int64)
    inv_rows = grp.inverse_rows.astype(np.intp)
    for i in range(grp.order):
        x = int(els[i][x0])
        u = inv_rows[i]  # u[y] = g^{-1}(y)
        pts = act[i][m.offsets[u] + p0[u]]
        row = pts - m.offsets[ys]
        if np.any(m.fiber_of[pts] != ys):
            raise InternalInvariantViolation("module action does not follow the grading")
        if witness[x] < 0:
            values[x] = row
            witness[x] = i
        elif not np.array_equal(values[x], row):
            y = int(np.argmax(values[x] != row))
            raise WellDefinednessFailure(f"elements {int(witness[x])} and {i} give different Phi({x}, {y})")
    return CocycleMap(m, values)


# ---------------------------------------------------------------- semidirect decomposition

def semidirect_check(phi: CocycleMap, limit: int = 4 * 10 ** 6, brace_limit: int = 50_000) -> Report:
    """Check G(Y) = S |x K for Y = X (x)_Phi A.

    S is the image of G(X) acting by (x, a) -> (lambda_g x, g . a) and K is
    the group of translations generated by Phi_x = sum_y Phi(x, y).  The four
    checks:

    (i) S is the additive Hall pi-subgroup of G(Y), pi = primes of |G(X)|.
        S is a subgroup of G(Y) of the right order, and it is invariant under
        lambda_b for every generator b = lambda_(y,0) of G(Y).  A
        lambda-invariant subgroup of (G(Y), o) is closed under +, and the
        additive Hall subgroup is the only one of its order.  lambda_b(s) is
        computed exactly as (b o s) - b = (b o s) o sigma_z with
        z = Sq^{-1}((b o s)^{-1}(y)).
    (ii) K lies in G(Y) and is the whole kernel of G(Y) -> G(X).
    (iii) |G(Y)| = |S| |K|.
    (iv) lambda_{s(g)}(f) = g . f for generators g of G(X) and f of K, with
        lambda_{s(lambda_x)} = lambda_{lambda_(x,0)} because the two differ by
        a socle element.
    Small groups additionally compare (i) with the brace computed in full.
    """
    m = phi.module
    base = m.base
    if not check_equivariance(phi):
        raise NotApplicable("Phi is not equivariant")
    order_x = m.group.order
    for x, f in enumerate(m.fibers):
        if math.gcd(order_x, f.size) != 1:
            raise NotApplicable("the extension is not coprime")
    y_set, pr = twisted_extension(phi, check=False)
    if not is_indecomposable(y_set):
        raise NotApplicable("the extension is decomposable")

    rep = Report()
    size = m.size
    gy = permutation_group(y_set, limit)
    grp_y = gy.group
    n_y = grp_y.order
    pi = set(primes_of(order_x))
    pi_part = math.prod(p ** _valuation(n_y, p) for p in pi)

    # S: the module action of G(X) on the scatter points
    s_perms = m.act
    s_idx = grp_y.find(s_perms)
    rep.check("S_in_G", bool((s_idx >= 0).all()), int(np.argmin(s_idx)) if (s_idx < 0).any() else None)
    rep.check("S_order_is_pi_part", len(s_perms) == pi_part, {"S": len(s_perms), "pi_part": pi_part})

    # K: translations by Phi_x
    # Phi_x has component Phi(x, y) in A_y
    fib = m.fiber_of
    phi_sum = [phi.values[x].copy() for x in range(base.n)]
    k_gens = [_translation(m, shift) for shift in phi_sum]
    k_group = generate([g.tolist() for g in k_gens], size, limit=n_y + 1) if size <= 255 else None
    if k_group is None:
        raise NotApplicable("scatter sets above 255 points are not supported here")
    k_order = k_group.order
    k_idx = grp_y.find(k_group.elements)
    rep.check("K_in_G", bool((k_idx >= 0).all()), None)
    kernel_count = _count_fiber_preserving(grp_y.elements, fib)
    rep.check("K_is_kernel", kernel_count == k_order, {"kernel": kernel_count, "K": k_order})
    rep.check("order_product", n_y == len(s_perms) * k_order,
              {"G(Y)": n_y, "S": len(s_perms), "K": k_order})

    # (i): lambda-invariance of S under the generators of G(Y)
    s_set = {p.tobytes() for p in s_perms.astype(np.int64)}
    sq = np.array([y_set.table[v][v] for v in range(size)], dtype=np.int64)
    sq_inv = np.argsort(sq)
    y_rows = y_set.array
    bad_i = None
    for yy in gy.reps:
        b = np.asarray(inverse(y_set.table[yy]), dtype=np.int64)
        for si, s in enumerate(s_perms):
            lam_bs = _lambda_of_generator(b, s, yy, sq_inv, y_rows)
            if lam_bs.astype(np.int64).tobytes() not in s_set:
                bad_i = (int(yy), si)
                break
        if bad_i:
            break
    rep.check("S_lambda_invariant", bad_i is None, bad_i)

    # (iv): lambda of s(lambda_x) on generators of K equals the module action
    bad_iv = None
    for x in sorted(set(m.group.reps)):
        yy = int(m.offsets[x])
        b = np.asarray(inverse(y_set.table[yy]), dtype=np.int64)
        perm = m.gen_perm_of(x)
        for z, f in enumerate(k_gens):
            left = _lambda_of_generator(b, f, yy, sq_inv, y_rows)
            moved = np.zeros(base.n, dtype=np.int64)
            for u in range(base.n):
                pt = perm[m.offsets[u] + phi_sum[z][u]]
                moved[fib[pt]] = pt - m.offsets[fib[pt]]
            right = _translation(m, moved)
            if not np.array_equal(left, right):
                bad_iv = (int(x), int(z))
                break
        if bad_iv:
            break
    rep.check("lambda_on_K_is_module_action", bad_iv is None, bad_iv)

    mode = "structural"
    if n_y <= brace_limit:
        b = brace_structure(gy, verify=False)
        hall = pi_primary(b, pi)
        same = sorted(int(v) for v in hall) == sorted(int(v) for v in s_idx)
        rep.check("S_is_hall_by_brace", same, None)
        mode = "structural+brace"
    rep.metrics.update({"group_order": n_y, "base_group_order": order_x, "S_order": len(s_perms),
                        "K_order": k_order, "mode": mode, "size": size})
    return rep


def _valuation(n: int, p: int) -> int:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def _translation(m: GradedModule, shift: np.ndarray) -> np.ndarray:
    """Scatter permutation (y, b) -> (y, b + shift[y])."""
    out = np.empty(m.size, dtype=np.int64)
    for y, f in enumerate(m.fibers):
        sl = slice(m.offsets[y], m.offsets[y + 1])
        out[sl] = m.offsets[y] + f.add[np.arange(f.size), shift[y]]
    return out


def _lambda_of_generator(b: np.ndarray, s: np.ndarray, y: int, sq_inv: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """lambda_b(s) = (b o s) - b for the generator b = lambda_y."""
    w = b[s]
    w_inv = np.argsort(w)
    z = sq_inv[w_inv[y]]
    return w[rows[z]]


def _count_fiber_preserving(elements: np.ndarray, fib: np.ndarray, chunk: int = 200_000) -> int:
    total = 0
    for s in range(0, len(elements), chunk):
        block = elements[s:s + chunk].astype(np.intp)
        total += int((fib[block] == fib[None, :]).all(axis=1).sum())
    return total


# ---------------------------------------------------------------- module isomorphisms

def module_map_perm(m: GradedModule, maps: Sequence) -> np.ndarray:
    """Scatter permutation of a per-fiber map given by matrices A_x -> A_x."""
    out = np.empty(m.size, dtype=np.int64)
    for x, f in enumerate(m.fibers):
        img = f.apply_matrix(maps[x], f)
        if img is None or len(set(img.tolist())) != f.size:
            raise NotModuleIso(f"map on A_{x} is not an automorphism")
        out[m.offsets[x]:m.offsets[x + 1]] = m.offsets[x] + img
    return out


def transport_by_module_iso(phi: CocycleMap, maps: Sequence) -> tuple[CocycleMap, tuple[int, ...]]:
    """Phi' = f o Phi for a graded module automorphism f, with the equivalence
    (x, a) -> (x, f(a)) between the two extensions."""
    m = phi.module
    f = module_map_perm(m, maps)
    for c in range(len(m.group.reps)):
        g = m.gen_perms[c]
        if not np.array_equal(f[g], g[f]):
            raise NotModuleIso(f"f does not commute with lambda_{m.group.reps[c]}")
    pts = f[phi.points()]
    new = CocycleMap(m, pts - m.offsets[None, :-1])
    y1, pr1 = twisted_extension(phi)
    y2, pr2 = twisted_extension(new)
    iota = tuple(int(v) for v in f)
    CycleSetHom(y1, y2, iota)  # raises if (x, a) -> (x, f(a)) is not a homomorphism
    if extensions_equivalent(pr1, pr2) is None:
        raise InternalInvariantViolation("transported extension is not equivalent")
    return new, iota


def scalar_maps(m: GradedModule, k: int) -> list:
    return [(np.eye(len(f.orders), dtype=np.int64) * k).tolist() for f in m.fibers]


# ---------------------------------------------------------------- cocycle identities

def lv_cocycle_witness(gamma: GammaMap):
    x = gamma.base
    t = x.array
    add = gamma.fiber.add
    v = gamma.values
    n = x.n
    a, b, c = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
    left = add[v[a, c], v[t[a, b], t[a, c]]]
    right = add[v[b, c], v[t[b, a], t[b, c]]]
    bad = np.argwhere(left != right)
    return tuple(int(i) for i in bad[0]) if len(bad) else None


def is_lv_cocycle(gamma: GammaMap) -> bool:
    """Gamma(x,z) + Gamma(x*y, x*z) = Gamma(y,z) + Gamma(y*x, y*z)."""
    return lv_cocycle_witness(gamma) is None


def twisted_cocycle_witness(phi: CocycleMap):
    m = phi.module
    x = m.base
    t = x.array
    n = x.n
    v = phi.values
    for a in range(n):
        for b in range(n):
            for c in range(n):
                left = _plus(m, c, v[a, c], _gen_act(m, a, t[a, c], v[t[a, b], t[a, c]]))
                right = _plus(m, c, v[b, c], _gen_act(m, b, t[b, c], v[t[b, a], t[b, c]]))
                if left != right:
                    return (a, b, c)
    return None


def is_twisted_cocycle(phi: CocycleMap) -> bool:
    """Phi(x,z) + lambda_x . Phi(x*y, x*z) = Phi(y,z) + lambda_y . Phi(y*x, y*z)."""
    return twisted_cocycle_witness(phi) is None


def _plus(m: GradedModule, y: int, a: int, b: int) -> int:
    return int(m.fibers[y].add[a, b])


def _gen_act(m: GradedModule, z: int, y: int, a: int) -> int:
    """Local index of lambda_z . a for a in A_y."""
    pt = int(m.gen_perm_of(z)[m.offsets[y] + a])
    return pt - int(m.offsets[m.fiber_of[pt]])


def _coboundary_values(m: GradedModule, c: Sequence[int]) -> np.ndarray:
    """d(c)(x, y) = c_y - lambda_x . c_{x*y}."""
    x = m.base
    n = x.n
    out = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            w = x.table[a][b]
            moved = _gen_act(m, a, w, int(c[w]))
            out[a, b] = m.fibers[b].add[int(c[b]), m.fibers[b].neg[moved]]
    return out


def coboundary(m: GradedModule, c: Sequence[int]) -> CocycleMap:
    return CocycleMap(m, _coboundary_values(m, c))


def add_cocycles(p: CocycleMap, q: CocycleMap, sign: int = 1) -> CocycleMap:
    m = p.module
    out = np.empty_like(p.values)
    for y, f in enumerate(m.fibers):
        other = q.values[:, y] if sign > 0 else f.neg[q.values[:, y]]
        out[:, y] = f.add[p.values[:, y], other]
    return CocycleMap(m, out)


def cohomologous(phi: CocycleMap, gamma: CocycleMap, verify: bool = True) -> tuple[int, ...] | None:
    """Some c with Phi(x,y) - Gamma(x,y) = c_y - lambda_x . c_{x*y}, or None.

    The equation ties c_y to c_{x*y}, so a value chosen at one point of a
    G(X)-orbit determines the orbit; each orbit tries every value at its
    least point and keeps the first consistent one.
    """
    m = phi.module
    x = m.base
    n = x.n
    diff = add_cocycles(phi, gamma, sign=-1).values
    c = [-1] * n
    done = [False] * n
    for start in range(n):
        if done[start]:
            continue
        orb = _orbit(x, start)
        found = None
        for v0 in range(m.fibers[start].size):
            trial = _propagate(m, diff, start, v0, orb)
            if trial is not None:
                found = trial
                break
        if found is None:
            return None
        for y in orb:
            c[y] = found[y]
            done[y] = True
    result = tuple(int(v) for v in c)
    if verify:
        if not np.array_equal(_coboundary_values(m, result), diff):
            raise InternalInvariantViolation("cohomology solver produced a wrong solution")
        if is_twisted_cocycle(phi):
            y1 = general_extension(phi)
            y2 = general_extension(gamma)
            iso = tuple(int(m.offsets[f] + m.fibers[f].add[int(m.local[pt]), result[f]])
                        for pt, f in enumerate(m.fiber_of))
            CycleSetHom(y1, y2, iso)  # raises if (x, a) -> (x, a + c_x) is not a homomorphism
    return result


def _orbit(x: CycleSet, start: int) -> list[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for row in x.table:
            for w in (row[v], row.index(v)):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return sorted(seen)


def _propagate(m: GradedModule, diff: np.ndarray, start: int, v0: int, orb: list[int]):
    """Fill c over an orbit from c_start = v0 using c_y = diff(x,y) + lambda_x . c_{x*y}."""
    x = m.base
    n = x.n
    c = {start: v0}
    stack = [start]
    while stack:
        w = stack.pop()
        # w = x*y for y = sigma_x^{-1}(w): c_y = diff(x, y) + lambda_x . c_w
        for a in range(n):
            y = x.table[a].index(w)
            val = int(m.fibers[y].add[diff[a, y], _gen_act(m, a, w, c[w])])
            if y in c:
                if c[y] != val:
                    return None
            else:
                c[y] = val
                stack.append(y)
    for a in range(n):
        for y in orb:
            w = x.table[a][y]
            val = int(m.fibers[y].add[diff[a, y], _gen_act(m, a, w, c[w])])
            if c[y] != val:
                return None
    return c


def equivariant_representative(phi: CocycleMap, max_states: int = 10 ** 5) -> CocycleMap:
    """The equivariant cocycle cohomologous to Phi, found by trying every c.

    Every c gives Phi - d(c); the equivariant ones are collected and there
    must be exactly one.
    """
    m = phi.module
    if not is_twisted_cocycle(phi):
        raise ValueError("Phi is not a twisted cocycle")
    total = math.prod(f.size for f in m.fibers)
    if math.gcd(m.group.order, total) != 1:
        raise CoprimalityViolation("|G(X)| and |A| are not coprime")
    if total > max_states:
        raise SizeLimitExceeded(f"{total} coboundaries exceed the search bound {max_states}")
    found: dict[bytes, CocycleMap] = {}
    for c in itertools.product(*[range(f.size) for f in m.fibers]):
        cand = add_cocycles(phi, coboundary(m, c), sign=-1)
        if check_equivariance(cand):
            found.setdefault(cand.values.tobytes(), cand)
    if len(found) != 1:
        raise NoRepresentativeFound(f"{len(found)} equivariant cocycles in the class")
    return next(iter(found.values()))


def all_maps(m: GradedModule):
    """Every Phi with Phi(x, y) in A_y (product of all fiber sizes over pairs)."""
    n = m.base.n
    ranges = [range(m.fibers[y].size) for _ in range(n) for y in range(n)]
    for vals in itertools.product(*ranges):
        yield CocycleMap(m, np.array(vals, dtype=np.int64).reshape(n, n))


__all__ = [
    "CocycleMap", "CoprimalityViolation", "EquivarianceViolation", "Fiber", "GammaMap", "GradedModule",
    "InvalidModule", "InvarianceViolation", "NoRepresentativeFound", "NotApplicable", "NotModuleIso",
    "NotPi1Equivariant", "WellDefinednessFailure", "add_cocycles", "all_maps", "check_equivariance", "coboundary",
    "cohomologous", "equivariant_representative", "gamma_to_cocycle", "general_extension", "is_abelian_extension",
    "indecomposability_criterion", "is_lv_cocycle", "is_twisted_cocycle", "parallel_extension", "permutation_module",
    "phi_from_phi0", "scalar_maps", "scalar_module", "semidirect_check", "transport_by_module_iso",
    "twisted_extension", "validate_graded_module", "zero_cocycle",
]
