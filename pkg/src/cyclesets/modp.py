"""Exact linear algebra over the prime field Z_q."""
from __future__ import annotations

from typing import Sequence


def rref(rows: Sequence[Sequence[int]], q: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form mod q; returns (nonzero rows, pivot columns)."""
    mat = [[v % q for v in r] for r in rows]
    pivots: list[int] = []
    if not mat:
        return [], []
    width = len(mat[0])
    top = 0
    for col in range(width):
        piv = next((i for i in range(top, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[top], mat[piv] = mat[piv], mat[top]
        inv = pow(mat[top][col], -1, q)
        mat[top] = [v * inv % q for v in mat[top]]
        for i in range(len(mat)):
            if i != top and mat[i][col]:
                c = mat[i][col]
                mat[i] = [(a - c * b) % q for a, b in zip(mat[i], mat[top])]
        pivots.append(col)
        top += 1
        if top == len(mat):
            break
    return mat[:top], pivots


def rank(rows: Sequence[Sequence[int]], q: int) -> int:
    return len(rref(rows, q)[0])


def nullspace(rows: Sequence[Sequence[int]], q: int, width: int | None = None) -> list[list[int]]:
    """Basis of {v : rows . v = 0} mod q."""
    if width is None:
        width = len(rows[0]) if rows else 0
    red, pivots = rref(rows, q)
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * width
        v[f] = 1
        for r, p in zip(red, pivots):
            v[p] = (-r[f]) % q
        basis.append(v)
    return basis


def in_span(basis_rref: Sequence[Sequence[int]], pivots: Sequence[int], v: Sequence[int], q: int) -> bool:
    w = [x % q for x in v]
    for r, p in zip(basis_rref, pivots):
        if w[p]:
            c = w[p]
            w = [(a - c * b) % q for a, b in zip(w, r)]
    return not any(w)


def span_elements(basis: Sequence[Sequence[int]], q: int, width: int) -> list[tuple[int, ...]]:
    """All vectors of the span (q^dim of them), in a fixed order."""
    out = [tuple([0] * width)]
    for b in basis:
        out = [tuple((x + c * y) % q for x, y in zip(v, b)) for c in range(q) for v in out]
    return sorted(out)
