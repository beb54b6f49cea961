"""Deterministic Schreier-Sims: group orders without listing the elements."""
from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np


class StabilizerChain:
    """Base and strong generating set for the group generated by ``gens``."""

    def __init__(self, gens: Iterable[Sequence[int]], degree: int):
        self.degree = degree
        self.identity = np.arange(degree, dtype=np.int64)
        self.base: list[int] = []
        self.strong: list[list[np.ndarray]] = []
        self.trans: list[dict[int, tuple[np.ndarray, np.ndarray]]] = []
        gens = [np.asarray(g, dtype=np.int64) for g in gens]
        gens = [g for g in gens if not np.array_equal(g, self.identity)]
        for g in gens:
            if not self.base:
                self._new_level(g)
            self.strong[0].append(g)
        if self.base:
            self._transversal(0)
            self._complete()

    def _new_level(self, g: np.ndarray) -> None:
        moved = int(np.nonzero(g != self.identity)[0][0])
        self.base.append(moved)
        self.strong.append([])
        self.trans.append({moved: (self.identity, self.identity)})

    def _transversal(self, i: int) -> None:
        b = self.base[i]
        trans = {b: (self.identity, self.identity)}
        queue = [b]
        for pt in queue:
            u = trans[pt][0]
            for s in self.strong[i]:
                img = int(s[pt])
                if img not in trans:
                    su = s[u]
                    trans[img] = (su, np.argsort(su))
                    queue.append(img)
        self.trans[i] = trans

    def sift(self, g: np.ndarray, start: int = 0) -> tuple[np.ndarray, int]:
        for i in range(start, len(self.base)):
            beta = int(g[self.base[i]])
            u = self.trans[i].get(beta)
            if u is None:
                return g, i
            g = u[1][g]
        return g, len(self.base)

    def _complete(self) -> None:
        i = len(self.base) - 1
        while i >= 0:
            restart = None
            for pt, (u, _) in list(self.trans[i].items()):
                for s in self.strong[i]:
                    su = s[u]
                    h = self.trans[i][int(su[self.base[i]])][1][su]
                    r, j = self.sift(h, i + 1)
                    if not np.array_equal(r, self.identity):
                        if j == len(self.base):
                            self._new_level(r)
                        for lv in range(i + 1, j + 1):
                            self.strong[lv].append(r)
                            self._transversal(lv)
                        restart = j
                        break
                if restart is not None:
                    break
            i = restart if restart is not None else i - 1

    @property
    def order(self) -> int:
        return math.prod(len(t) for t in self.trans)

    def contains(self, g: Sequence[int]) -> bool:
        r, j = self.sift(np.asarray(g, dtype=np.int64))
        return j == len(self.base) and np.array_equal(r, self.identity)


def group_order(gens: Iterable[Sequence[int]], degree: int) -> int:
    return StabilizerChain(gens, degree).order


@lru_cache(maxsize=4096)
def _table_order(table: tuple) -> int:
    rows = sorted(set(table))
    return group_order([np.argsort(np.asarray(r)) for r in rows], len(table))


def cycle_set_group_order(x) -> int:
    """|G(X)| for a cycle set, cached by table."""
    return _table_order(x.table) if x.n else 1
