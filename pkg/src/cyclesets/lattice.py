"""Integer lattices of full rank in Z^k and arithmetic modulo them.

Used to give the additive group of a brace explicit coordinates: the
additive closure from generators yields relations, their lattice L is kept in
upper-triangular (Hermite) form, and Z^k / L is then addressed by reduced
coordinate vectors.
"""
from __future__ import annotations

from math import gcd

import numpy as np


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


class Lattice:
    """Sublattice of Z^k with an upper-triangular basis (pivot row per column)."""

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: list[list[int] | None] = [None] * dim

    @property
    def full_rank(self) -> bool:
        return all(r is not None for r in self.rows)

    @property
    def diagonal(self) -> list[int]:
        return [r[i] if r is not None else 0 for i, r in enumerate(self.rows)]

    @property
    def index(self) -> int:
        """|Z^k / L| (0 while the rank is not full)."""
        out = 1
        for d in self.diagonal:
            out *= d
        return out

    def insert(self, v) -> bool:
        """Add v to the lattice; returns True when the lattice grew."""
        v = [int(t) for t in v]
        grew = False
        for c in range(self.dim):
            if v[c] == 0:
                continue
            row = self.rows[c]
            if row is None:
                if v[c] < 0:
                    v = [-t for t in v]
                self.rows[c] = v
                grew = True
                break
            g, s, t = _xgcd(row[c], v[c])
            if g < 0:
                g, s, t = -g, -s, -t
            new = [s * a + t * b for a, b in zip(row, v)]
            rest = [(v[c] // g) * a - (row[c] // g) * b for a, b in zip(row, v)]
            if new != row:
                grew = True
            self.rows[c] = new
            v = rest
        if grew:
            self._tidy()
        return grew

    def _tidy(self) -> None:
        """Reduce the entries above each pivot into [0, pivot)."""
        for c in range(self.dim):
            piv = self.rows[c]
            if piv is None:
                continue
            for r in range(c):
                row = self.rows[r]
                if row is None or row[c] == 0:
                    continue
                q = row[c] // piv[c]
                self.rows[r] = [a - q * b for a, b in zip(row, piv)]

    def reduce(self, vs: np.ndarray) -> np.ndarray:
        """Reduce vectors (one per row) to their canonical coset representative.

        For pivot columns the result lies in [0, d_c); other columns are left
        as they are.
        """
        out = np.array(vs, dtype=np.int64, copy=True)
        if out.ndim == 1:
            return self.reduce(out[None, :])[0]
        for c, row in enumerate(self.rows):
            if row is None:
                continue
            q = np.floor_divide(out[:, c], row[c])
            if q.any():
                out -= q[:, None] * np.asarray(row, dtype=np.int64)[None, :]
        return out

    def keys(self, reduced: np.ndarray) -> np.ndarray:
        """Mixed-radix integer of a reduced vector (requires full rank)."""
        key = np.zeros(len(reduced), dtype=np.int64)
        for c in range(self.dim - 1, -1, -1):
            key = key * self.rows[c][c] + reduced[:, c]
        return key


def primes_of(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def invariant_factors_from_counts(order: int, count_killed) -> list[int]:
    """Invariant factors of a finite abelian group of the given order.

    ``count_killed(m)`` must return #{a : m*a = 0}.  For each prime p the
    numbers of elements killed by p^k determine the p-primary part.
    """
    parts: list[list[int]] = []
    for p in primes_of(order):
        e = 0
        t = order
        while t % p == 0:
            t //= p
            e += 1
        logs = [0]
        for k in range(1, e + 1):
            cnt = count_killed(p ** k)
            s = 0
            while cnt > 1:
                cnt //= p
                s += 1
            logs.append(s)
            if s == e:
                break
        # number of cyclic factors of order >= p^k is logs[k] - logs[k-1]
        ge = [logs[k] - logs[k - 1] for k in range(1, len(logs))]
        exps = []
        for k in range(len(ge)):
            nxt = ge[k + 1] if k + 1 < len(ge) else 0
            exps.extend([k + 1] * (ge[k] - nxt))
        parts.append(sorted((p ** x for x in exps), reverse=True))
    width = max((len(p) for p in parts), default=0)
    factors = []
    for i in range(width):
        f = 1
        for p in parts:
            if i < len(p):
                f *= p[i]
        factors.append(f)
    return sorted(factors)


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b
