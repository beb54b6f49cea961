"""Cycle sets, their involutive solutions, and axiom validation."""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .report import Report

Perm = tuple[int, ...]


class CycleSetError(ValueError):
    """Base class for rejected cycle-set or solution input."""


class MalformedTable(CycleSetError):
    pass


class AxiomViolation(CycleSetError):
    axiom = ""

    def __init__(self, witness, message: str = ""):
        self.witness = witness
        super().__init__(message or f"{self.axiom} fails at {witness}")


class C1Violation(AxiomViolation):
    """(x*y)*(x*z) != (y*x)*(y*z); witness is (x, y, z)."""

    axiom = "C1"

    def __init__(self, x: int, y: int, z: int):
        super().__init__((x, y, z))


class C2Violation(AxiomViolation):
    """Row x is not a permutation."""

    axiom = "C2"

    def __init__(self, row: int):
        self.row = row
        super().__init__(row)


class C3Violation(AxiomViolation):
    """The square map is not injective; witness is (x, y) with x*x == y*y."""

    axiom = "C3"


class InvalidSolution(CycleSetError):
    def __init__(self, report: Report):
        self.report = report
        failed = [name for name, ok in report.checks.items() if not ok]
        super().__init__(f"solution fails {', '.join(failed)}: {report.witnesses}")


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(a: Sequence[int], b: Sequence[int]) -> Perm:
    """(a o b)(i) = a(b(i))."""
    return tuple(a[i] for i in b)


def inverse(p: Sequence[int]) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def is_permutation(seq: Sequence[int], n: int | None = None) -> bool:
    n = len(seq) if n is None else n
    return len(seq) == n and sorted(seq) == list(range(n))


def cycles(p: Sequence[int]) -> list[list[int]]:
    """Cycles of p, each starting at its least element, ordered by that element."""
    seen = [False] * len(p)
    out = []
    for s in range(len(p)):
        if seen[s]:
            continue
        cyc = []
        x = s
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = p[x]
        out.append(cyc)
    return out


def cycle_type(p: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(len(c) for c in cycles(p)))


@dataclass(frozen=True)
class CycleSet:
    """Finite cycle set given by its table, table[x][y] = x * y.

    Construction only checks the shape; use :func:`validate_cycle_set`
    to check the axioms.
    """

    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        table = tuple(tuple(int(v) for v in row) for row in self.table)
        n = len(table)
        if any(len(row) != n for row in table):
            raise MalformedTable("table must be square")
        if any(not 0 <= v < n for row in table for v in row):
            raise MalformedTable("entries must lie in 0..n-1")
        object.__setattr__(self, "table", table)

    @property
    def n(self) -> int:
        return len(self.table)

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    def sigma(self, x: int) -> Perm:
        return self.table[x]

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.table, dtype=np.int64).reshape(self.n, self.n)

    def relabel(self, pi: Sequence[int]) -> "CycleSet":
        """The isomorphic copy in which element x is renamed pi[x]."""
        n = self.n
        t = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                t[pi[x]][pi[y]] = pi[self.table[x][y]]
        return CycleSet(tuple(map(tuple, t)))

    def to_dict(self) -> dict:
        return {"n": self.n, "table": [list(r) for r in self.table]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "CycleSet":
        if not isinstance(data, dict) or "table" not in data:
            raise MalformedTable("expected an object with a 'table' field")
        table = data["table"]
        if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
            raise MalformedTable("table must be a list of rows")
        if not all(isinstance(v, int) and not isinstance(v, bool) for r in table for v in r):
            raise MalformedTable("table entries must be integers")
        if "n" in data and data["n"] != len(table):
            raise MalformedTable("n does not match the table size")
        return cls(tuple(map(tuple, table)))

    @classmethod
    def from_json(cls, text: str) -> "CycleSet":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedTable(f"invalid JSON: {exc}") from exc
        return cls.from_dict(data)


def first_bad_row(table: Sequence[Sequence[int]]) -> int | None:
    n = len(table)
    for x, row in enumerate(table):
        if not is_permutation(row, n):
            return x
    return None


def first_c1_violation(table) -> tuple[int, int, int] | None:
    arr = np.asarray(table, dtype=np.int64)
    if arr.size == 0:
        return None
    return kernels.first_c1_violation(arr)


def first_c3_violation(table: Sequence[Sequence[int]]) -> tuple[int, int] | None:
    seen: dict[int, int] = {}
    for y in range(len(table)):
        s = table[y][y]
        if s in seen:
            return (seen[s], y)
        seen[s] = y
    return None


def validate_cycle_set(table) -> CycleSet:
    """Return a CycleSet when C1, C2 and C3 hold, else raise the first failure.

    Checks run in the order C2, C1, C3, since C1 only makes sense once every
    row is a permutation.
    """
    if isinstance(table, CycleSet):
        x = table
    else:
        try:
            x = CycleSet(tuple(tuple(row) for row in table))
        except TypeError as exc:
            raise MalformedTable(str(exc)) from exc
    bad = first_bad_row(x.table)
    if bad is not None:
        raise C2Violation(bad)
    w = first_c1_violation(x.array)
    if w is not None:
        raise C1Violation(*w)
    w3 = first_c3_violation(x.table)
    if w3 is not None:
        raise C3Violation(w3)
    return x


def square_map(x: CycleSet) -> Perm:
    return tuple(x.table[i][i] for i in range(x.n))


@dataclass(frozen=True)
class Solution:
    """r(x, y) = (lam[x][y], rho[y][x]) on {0..n-1}^2."""

    lam: tuple[Perm, ...]
    rho: tuple[Perm, ...]

    def __post_init__(self):
        lam = tuple(tuple(int(v) for v in p) for p in self.lam)
        rho = tuple(tuple(int(v) for v in p) for p in self.rho)
        n = len(lam)
        if len(rho) != n or any(len(p) != n for p in lam + rho):
            raise MalformedTable("lambda and rho must be n maps of length n")
        if any(not 0 <= v < n for p in lam + rho for v in p):
            raise MalformedTable("map values must lie in 0..n-1")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "rho", rho)

    @property
    def n(self) -> int:
        return len(self.lam)

    def r(self, x: int, y: int) -> tuple[int, int]:
        return self.lam[x][y], self.rho[y][x]


def verify_ybe(s: Solution) -> Report:
    """Check involutivity, nondegeneracy and the braid relation exhaustively."""
    n = s.n
    lam = np.array(s.lam, dtype=np.int64).reshape(n, n)
    rho = np.array(s.rho, dtype=np.int64).reshape(n, n)
    report = Report()

    bad_lam = next((x for x in range(n) if not is_permutation(s.lam[x], n)), None)
    bad_rho = next((y for y in range(n) if not is_permutation(s.rho[y], n)), None)
    report.check("nondegenerate", bad_lam is None and bad_rho is None,
                 {"lambda": bad_lam} if bad_lam is not None else {"rho": bad_rho})

    # r(x, y) = (lam[x, y], rho[y, x]); grids indexed [x, y].
    xs, ys = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    a = lam[xs, ys]
    b = rho[ys, xs]
    back_x = lam[a, b]
    back_y = rho[b, a]
    bad = (back_x != xs) | (back_y != ys)
    report.check("involutive", not bad.any(),
                 _first_index(bad) if bad.any() else None)

    x3, y3, z3 = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")

    def r12(u, v, w):
        return lam[u, v], rho[v, u], w

    def r23(u, v, w):
        return u, lam[v, w], rho[w, v]

    left = r12(*r23(*r12(x3, y3, z3)))
    right = r23(*r12(*r23(x3, y3, z3)))
    bad3 = (left[0] != right[0]) | (left[1] != right[1]) | (left[2] != right[2])
    report.check("ybe", not bad3.any(), _first_index(bad3) if bad3.any() else None)
    report.metrics["n"] = n
    return report


def _first_index(mask: np.ndarray) -> tuple[int, ...]:
    flat = int(np.argmax(mask.ravel()))
    return tuple(int(i) for i in np.unravel_index(flat, mask.shape))


def to_solution(x: CycleSet) -> Solution:
    """The solution with r(x*y, x) = (y*x, y).

    For a pair (u, v) put y = sigma_v^{-1}(u); then r(u, v) = (sigma_y(v), y).
    """
    n = x.n
    inv_rows = [inverse(x.table[v]) for v in range(n)]
    lam = [[0] * n for _ in range(n)]
    rho = [[0] * n for _ in range(n)]
    for u in range(n):
        for v in range(n):
            y = inv_rows[v][u]
            lam[u][v] = x.table[y][v]
            rho[v][u] = y
    return Solution(tuple(map(tuple, lam)), tuple(map(tuple, rho)))


def from_solution(s: Solution) -> CycleSet:
    """Cycle set with x * y = rho_x^{-1}(y), the inverse of :func:`to_solution`.

    Under r(x * y, x) = (y * x, y) the second component recovers sigma:
    rho_x(x * y) = y.  Rejects invalid solutions.
    """
    report = verify_ybe(s)
    if not report.ok:
        raise InvalidSolution(report)
    return validate_cycle_set([inverse(p) for p in s.rho])


def product_index(coords: Iterable[int], radices: Sequence[int]) -> int:
    """Row-major flattening: (x, a, s) with radices (p, q, r) -> (x*q + a)*r + s."""
    idx = 0
    for c, r in zip(coords, radices):
        idx = idx * r + c
    return idx


def product_coords(index: int, radices: Sequence[int]) -> tuple[int, ...]:
    out = []
    for r in reversed(radices):
        index, c = divmod(index, r)
        out.append(c)
    return tuple(reversed(out))


__all__ = [
    "AxiomViolation", "C1Violation", "C2Violation", "C3Violation", "CycleSet",
    "CycleSetError", "InvalidSolution", "MalformedTable", "Perm", "Solution",
    "compose", "cycle_type", "cycles", "first_c1_violation", "from_solution",
    "identity", "inverse", "is_permutation", "product_coords", "product_index",
    "square_map", "to_solution", "validate_cycle_set", "verify_ybe",
]
