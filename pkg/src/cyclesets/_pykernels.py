"""Pure-Python versions of the hot loops.

Every function here has a twin in ``_ckernels.pyx`` with identical inputs,
outputs and iteration order, so results never depend on which one runs.
"""
from __future__ import annotations

import itertools

import numpy as np

BACKEND = "python"


def closure(gens: np.ndarray, limit: int):
    """Breadth-first closure of a set of permutations under composition.

    ``gens`` is a (k, n) uint8 array.  Element ``i`` of the result equals
    ``elements[parent[i]] o gens[via[i]]``; row 0 is the identity.  Returns
    ``(elements, parent, via, complete)`` where ``complete`` is False when
    the closure was cut off after ``limit`` elements.
    """
    k, n = gens.shape
    ident = np.arange(n, dtype=np.uint8)
    seen = {ident.tobytes(): 0}
    rows = [ident]
    parent = [-1]
    via = [-1]
    head = 0
    while head < len(rows):
        g = rows[head]
        for j in range(k):
            h = g[gens[j]]
            key = h.tobytes()
            if key not in seen:
                if len(rows) >= limit:
                    return np.array(rows, dtype=np.uint8), np.array(parent), np.array(via, dtype=np.int32), False
                seen[key] = len(rows)
                rows.append(h)
                parent.append(head)
                via.append(j)
        head += 1
    return np.array(rows, dtype=np.uint8), np.array(parent), np.array(via, dtype=np.int32), True


def first_c1_violation(table: np.ndarray):
    """Lexicographically first (x, y, z) breaking (x*y)*(x*z) = (y*x)*(y*z)."""
    t = table.tolist()
    n = len(t)
    for x in range(n):
        tx = t[x]
        for y in range(n):
            ty = t[y]
            u = t[tx[y]]
            v = t[ty[x]]
            for z in range(n):
                if u[tx[z]] != v[ty[z]]:
                    return (x, y, z)
    return None


def _inverse(p):
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return inv


def search_tables(n: int, row0s, indecomposable: bool, max_results: int = -1):
    """Enumerate all cycle-set tables on n points by row backtracking.

    Rows are decided in increasing order of x; after each placement the C1
    relation sigma_{x*y} sigma_x = sigma_{y*x} sigma_y is propagated: when
    three of the four rows are known the fourth is forced.  ``row0s``
    restricts the choices for row 0 (None means all permutations).
    Returns ``(tables, nodes)`` with tables as a list of tuples of rows.
    """
    perms = list(itertools.permutations(range(n)))
    first = perms if row0s is None else [tuple(int(v) for v in r) for r in row0s]
    rows: list = [None] * n
    found: list = []
    nodes = 0

    def propagate(stack):
        changed = True
        while changed:
            changed = False
            for x in range(n):
                rx = rows[x]
                if rx is None:
                    continue
                for y in range(x + 1, n):
                    ry = rows[y]
                    if ry is None:
                        continue
                    u = rx[y]
                    v = ry[x]
                    ru = rows[u]
                    rv = rows[v]
                    if ru is not None and rv is not None:
                        for z in range(n):
                            if ru[rx[z]] != rv[ry[z]]:
                                return False
                    elif ru is not None:
                        iy = _inverse(ry)
                        rows[v] = tuple(ru[rx[iy[z]]] for z in range(n))
                        stack.append(v)
                        changed = True
                    elif rv is not None:
                        ix = _inverse(rx)
                        rows[u] = tuple(rv[ry[ix[z]]] for z in range(n))
                        stack.append(u)
                        changed = True
        return True

    def leaf_ok():
        if len({rows[i][i] for i in range(n)}) != n:
            return False
        if indecomposable:
            orbit = {0}
            todo = [0]
            while todo:
                y = todo.pop()
                for x in range(n):
                    z = rows[x][y]
                    if z not in orbit:
                        orbit.add(z)
                        todo.append(z)
            return len(orbit) == n
        return True

    def rec():
        nonlocal nodes
        nodes += 1
        if 0 <= max_results <= len(found):
            return
        try:
            x = rows.index(None)
        except ValueError:
            if leaf_ok():
                found.append(tuple(rows))
            return
        for p in (first if x == 0 else perms):
            rows[x] = p
            stack = [x]
            if propagate(stack):
                rec()
            for v in stack:
                rows[v] = None

    if n > 0:
        rec()
    return found, nodes


class _Canon:
    """Branch-and-bound for the least relabeled table (see ``canonical_search``)."""

    def __init__(self, table):
        self.t = [list(r) for r in table]
        self.n = len(self.t)
        self.best = None
        self.version = 0
        self.agree = 0

    def start(self, seq, others):
        n = self.n
        self.cyc_list = [list(c) for c in others]
        self.cyc_of = [-1] * n
        for i, c in enumerate(self.cyc_list):
            for x in c:
                self.cyc_of[x] = i
        self.cyc_bound = [False] * len(others)
        self.blocks = []
        s = len(seq)
        for c in self.cyc_list:
            self.blocks.append((s, len(c)))
            s += len(c)
        self.block_free = [True] * len(self.blocks)
        self.block_at = [-1] * n
        for b, (s, length) in enumerate(self.blocks):
            for i in range(s, s + length):
                self.block_at[i] = b
        self.lab = [-1] * n
        self.inv = [-1] * n
        for i, x in enumerate(seq):
            self.lab[x] = i
            self.inv[i] = x
        self.cur = [0] * (n * n)
        for i in range(len(seq)):
            self.cur[i] = (i + 1) % len(seq)
        for s, length in self.blocks:
            for k in range(length):
                self.cur[s + k] = s + (k + 1) % length
        if self.best is None:
            self.agree = 0
        else:
            self.agree = n if self.cur[:n] == self.best[:n] else 0
        self.rec(n)

    def bind(self, cid, b, first):
        c = self.cyc_list[cid]
        s, length = self.blocks[b]
        k = c.index(first)
        for off in range(length):
            x = c[(k + off) % length]
            self.lab[x] = s + off
            self.inv[s + off] = x
        self.cyc_bound[cid] = True
        self.block_free[b] = False

    def unbind(self, cid, b):
        s, length = self.blocks[b]
        for x in self.cyc_list[cid]:
            self.lab[x] = -1
        for i in range(s, s + length):
            self.inv[i] = -1
        self.cyc_bound[cid] = False
        self.block_free[b] = True

    def rec(self, pos):
        n = self.n
        if pos == n * n:
            if self.best is None or self.agree < pos:
                self.best = list(self.cur)
                self.version += 1
                self.agree = pos
            return
        i, j = divmod(pos, n)
        for label in (i, j):
            if self.inv[label] < 0:
                saved, entry = self.agree, self.version
                b = self.block_at[label]
                s, length = self.blocks[b]
                off = label - s
                for cid, c in enumerate(self.cyc_list):
                    if self.cyc_bound[cid] or len(c) != length:
                        continue
                    for k in range(length):
                        self.bind(cid, b, c[(k - off) % length])
                        self.rec(pos)
                        self.unbind(cid, b)
                        # a new best found below shares our prefix up to pos
                        self.agree = pos if self.version != entry else saved
                return
        c = self.t[self.inv[i]][self.inv[j]]
        bound_here = None
        if self.lab[c] < 0:
            cid = self.cyc_of[c]
            length = len(self.cyc_list[cid])
            b = next(b for b, (s, ln) in enumerate(self.blocks) if self.block_free[b] and ln == length)
            self.bind(cid, b, c)
            bound_here = (cid, b)
        v = self.lab[c]
        saved, entry = self.agree, self.version
        proceed = True
        if self.best is not None and self.agree >= pos:
            bv = self.best[pos]
            if v > bv:
                proceed = False
            elif v == bv:
                self.agree = pos + 1
            else:
                self.agree = pos
        if proceed:
            self.cur[pos] = v
            self.rec(pos + 1)
        self.agree = pos if self.version != entry else saved
        if bound_here is not None:
            self.unbind(*bound_here)


def canonical_search(table, starts, seqs, others):
    """Least relabeled table, flattened, over the prepared start elements.

    For each start e, the sigma_e-cycle through e takes labels 0..L-1 in
    order and the other cycles (``others``, sorted by length) are matched to
    consecutive label blocks.  An element first met as a table value is
    bound greedily: its cycle goes to the earliest free block of its length
    with the element at the block start, which is the least value possible
    at that cell.  Only labels needed as row or column index before being
    bound cause branching.
    """
    import sys

    n = len(table)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n * n + 1000))
    c = _Canon(table)
    for seq, rest in zip(seqs, others):
        c.start(seq, rest)
    return tuple(c.best)
