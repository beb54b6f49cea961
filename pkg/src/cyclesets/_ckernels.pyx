# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops; see ``_pykernels`` for the contract."""
import itertools

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint8_t, uint64_t, int32_t, int64_t
from libc.stdlib cimport malloc, free, realloc
from libc.string cimport memcmp, memcpy

cnp.import_array()

BACKEND = "cython"

cdef enum:
    MAXN = 12


cdef inline uint64_t _hash(const uint8_t* p, int n) nogil:
    cdef uint64_t h = 1469598103934665603ULL
    cdef int i
    for i in range(n):
        h ^= p[i]
        h *= 1099511628211ULL
    return h


def closure(cnp.ndarray gens_in, long limit):
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] gens = np.ascontiguousarray(gens_in, dtype=np.uint8)
    cdef int k = gens.shape[0]
    cdef int n = gens.shape[1]
    cdef long cap = 1024
    cdef long size = 1
    cdef long head = 0
    cdef long hcap = 4096
    cdef long mask = hcap - 1
    cdef int32_t* slots = <int32_t*>malloc(hcap * sizeof(int32_t))
    cdef uint8_t* buf = <uint8_t*>malloc(cap * n)
    cdef int64_t* parent = <int64_t*>malloc(cap * sizeof(int64_t))
    cdef int32_t* via = <int32_t*>malloc(cap * sizeof(int32_t))
    cdef uint8_t* h = <uint8_t*>malloc(n if n > 0 else 1)
    cdef uint8_t* g
    cdef uint8_t* gen
    cdef long i, j, s, z
    cdef uint64_t hv
    cdef bint complete = True
    cdef bint found
    for s in range(hcap):
        slots[s] = -1
    for z in range(n):
        buf[z] = <uint8_t>z
    parent[0] = -1
    via[0] = -1
    hv = _hash(buf, n)
    slots[hv & mask] = 0
    try:
        while head < size:
            for j in range(k):
                g = buf + head * n
                gen = &gens[j, 0]
                for z in range(n):
                    h[z] = g[gen[z]]
                hv = _hash(h, n)
                s = hv & mask
                found = False
                while slots[s] != -1:
                    if memcmp(buf + slots[s] * n, h, n) == 0:
                        found = True
                        break
                    s = (s + 1) & mask
                if found:
                    continue
                if size >= limit:
                    complete = False
                    break
                if size == cap:
                    cap *= 2
                    buf = <uint8_t*>_grow(buf, cap * n)
                    parent = <int64_t*>_grow(parent, cap * sizeof(int64_t))
                    via = <int32_t*>_grow(via, cap * sizeof(int32_t))
                memcpy(buf + size * n, h, n)
                parent[size] = head
                via[size] = j
                slots[s] = size
                size += 1
                if 2 * size > hcap:
                    free(slots)
                    hcap *= 4
                    mask = hcap - 1
                    slots = <int32_t*>malloc(hcap * sizeof(int32_t))
                    for s in range(hcap):
                        slots[s] = -1
                    for i in range(size):
                        s = _hash(buf + i * n, n) & mask
                        while slots[s] != -1:
                            s = (s + 1) & mask
                        slots[s] = i
            if not complete:
                break
            head += 1
        elements = np.empty((size, n), dtype=np.uint8)
        par = np.empty(size, dtype=np.int64)
        vv = np.empty(size, dtype=np.int32)
        if size * n > 0:
            memcpy(cnp.PyArray_DATA(elements), buf, size * n)
        memcpy(cnp.PyArray_DATA(par), parent, size * sizeof(int64_t))
        memcpy(cnp.PyArray_DATA(vv), via, size * sizeof(int32_t))
        return elements, par, vv, complete
    finally:
        free(slots)
        free(buf)
        free(parent)
        free(via)
        free(h)


cdef void* _grow(void* p, size_t nbytes) except NULL:
    cdef void* q = realloc(p, nbytes)
    if q == NULL:
        raise MemoryError()
    return q


def first_c1_violation(cnp.ndarray table_in):
    cdef cnp.ndarray[cnp.int64_t, ndim=2] t = np.ascontiguousarray(table_in, dtype=np.int64)
    cdef long n = t.shape[0]
    cdef long x, y, z, u, v
    for x in range(n):
        for y in range(n):
            u = t[x, y]
            v = t[y, x]
            for z in range(n):
                if t[u, t[x, z]] != t[v, t[y, z]]:
                    return (int(x), int(y), int(z))
    return None


cdef struct Search:
    int n
    int rows[MAXN][MAXN]
    bint known[MAXN]
    int stack[MAXN]
    int depth


cdef bint _propagate(Search* st, int* stack, int* top) nogil:
    cdef int n = st.n
    cdef bint changed = True
    cdef int x, y, z, u, v
    cdef int inv[MAXN]
    while changed:
        changed = False
        for x in range(n):
            if not st.known[x]:
                continue
            for y in range(x + 1, n):
                if not st.known[y]:
                    continue
                u = st.rows[x][y]
                v = st.rows[y][x]
                if st.known[u] and st.known[v]:
                    for z in range(n):
                        if st.rows[u][st.rows[x][z]] != st.rows[v][st.rows[y][z]]:
                            return False
                elif st.known[u]:
                    for z in range(n):
                        inv[st.rows[y][z]] = z
                    for z in range(n):
                        st.rows[v][z] = st.rows[u][st.rows[x][inv[z]]]
                    st.known[v] = True
                    stack[top[0]] = v
                    top[0] += 1
                    changed = True
                elif st.known[v]:
                    for z in range(n):
                        inv[st.rows[x][z]] = z
                    for z in range(n):
                        st.rows[u][z] = st.rows[v][st.rows[y][inv[z]]]
                    st.known[u] = True
                    stack[top[0]] = u
                    top[0] += 1
                    changed = True
    return True


cdef bint _leaf_ok(Search* st, bint indecomposable) nogil:
    cdef int n = st.n
    cdef bint seen[MAXN]
    cdef int todo[MAXN]
    cdef int x, y, z, cnt, top
    for x in range(n):
        seen[x] = False
    for x in range(n):
        z = st.rows[x][x]
        if seen[z]:
            return False
        seen[z] = True
    if not indecomposable:
        return True
    for x in range(n):
        seen[x] = False
    seen[0] = True
    todo[0] = 0
    top = 1
    cnt = 1
    while top > 0:
        top -= 1
        y = todo[top]
        for x in range(n):
            z = st.rows[x][y]
            if not seen[z]:
                seen[z] = True
                todo[top] = z
                top += 1
                cnt += 1
    return cnt == n


cdef class _Runner:
    cdef Search st
    cdef int[:, :] perms
    cdef int[:, :] first
    cdef bint indecomposable
    cdef long max_results
    cdef public long nodes
    cdef public list found

    cdef void rec(self):
        cdef int n = self.st.n
        cdef int x = -1
        cdef int i, j, z, top
        cdef int stack[MAXN]
        cdef int[:, :] cands
        self.nodes += 1
        if self.max_results >= 0 and len(self.found) >= self.max_results:
            return
        for i in range(n):
            if not self.st.known[i]:
                x = i
                break
        if x < 0:
            if _leaf_ok(&self.st, self.indecomposable):
                self.found.append(tuple(tuple(self.st.rows[i][j] for j in range(n)) for i in range(n)))
            return
        cands = self.first if x == 0 else self.perms
        for i in range(cands.shape[0]):
            for z in range(n):
                self.st.rows[x][z] = cands[i, z]
            self.st.known[x] = True
            stack[0] = x
            top = 1
            if _propagate(&self.st, stack, &top):
                self.rec()
            for j in range(top):
                self.st.known[stack[j]] = False


def search_tables(int n, row0s, bint indecomposable, long max_results=-1):
    if n > MAXN:
        raise ValueError("search supports at most %d points" % MAXN)
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int32).reshape(-1, n)
    first = perms if row0s is None else np.ascontiguousarray(np.asarray(row0s, dtype=np.int32).reshape(-1, n))
    cdef _Runner run = _Runner()
    cdef int i
    run.st.n = n
    for i in range(MAXN):
        run.st.known[i] = False
    run.perms = perms
    run.first = first
    run.indecomposable = indecomposable
    run.max_results = max_results
    run.nodes = 0
    run.found = []
    if n > 0:
        run.rec()
    return run.found, run.nodes


cdef struct Canon:
    int n
    int* t
    int* best
    int* cur
    bint has_best
    long version
    long agree
    int* lab
    int* inv
    int ncyc
    int* cyc_of
    int* cyc_start
    int* cyc_len
    int* cyc_elems
    int* cyc_pos
    bint* cyc_bound
    int nblk
    int* blk_start
    int* blk_len
    bint* blk_free
    int* block_at


cdef void _bind(Canon* c, int cid, int b, int first) nogil:
    cdef int L = c.cyc_len[cid]
    cdef int s = c.blk_start[b]
    cdef int k = c.cyc_pos[first]
    cdef int off, x
    for off in range(L):
        x = c.cyc_elems[c.cyc_start[cid] + (k + off) % L]
        c.lab[x] = s + off
        c.inv[s + off] = x
    c.cyc_bound[cid] = True
    c.blk_free[b] = False


cdef void _unbind(Canon* c, int cid, int b) nogil:
    cdef int L = c.cyc_len[cid]
    cdef int s = c.blk_start[b]
    cdef int off
    for off in range(L):
        c.lab[c.cyc_elems[c.cyc_start[cid] + off]] = -1
        c.inv[s + off] = -1
    c.cyc_bound[cid] = False
    c.blk_free[b] = True


cdef void _canon_rec(Canon* c, long pos) nogil:
    cdef int n = c.n
    cdef long nn = <long>n * n
    cdef int i, j, label, b, s, L, off, cid, k, first, val, cel, bound_cid, bound_blk, side
    cdef long saved, entry
    cdef bint proceed
    if pos == nn:
        if not c.has_best or c.agree < pos:
            for k in range(nn):
                c.best[k] = c.cur[k]
            c.has_best = True
            c.version += 1
            c.agree = pos
        return
    i = pos // n
    j = pos % n
    for side in range(2):
        label = i if side == 0 else j
        if c.inv[label] < 0:
            saved = c.agree
            entry = c.version
            b = c.block_at[label]
            s = c.blk_start[b]
            L = c.blk_len[b]
            off = label - s
            for cid in range(c.ncyc):
                if c.cyc_bound[cid] or c.cyc_len[cid] != L:
                    continue
                for k in range(L):
                    first = c.cyc_elems[c.cyc_start[cid] + ((k - off) % L + L) % L]
                    _bind(c, cid, b, first)
                    _canon_rec(c, pos)
                    _unbind(c, cid, b)
                    c.agree = pos if c.version != entry else saved
            return
    cel = c.t[c.inv[i] * n + c.inv[j]]
    bound_cid = -1
    bound_blk = -1
    if c.lab[cel] < 0:
        bound_cid = c.cyc_of[cel]
        L = c.cyc_len[bound_cid]
        for b in range(c.nblk):
            if c.blk_free[b] and c.blk_len[b] == L:
                bound_blk = b
                break
        _bind(c, bound_cid, bound_blk, cel)
    val = c.lab[cel]
    saved = c.agree
    entry = c.version
    proceed = True
    if c.has_best and c.agree >= pos:
        if val > c.best[pos]:
            proceed = False
        elif val == c.best[pos]:
            c.agree = pos + 1
        else:
            c.agree = pos
    if proceed:
        c.cur[pos] = val
        _canon_rec(c, pos + 1)
    c.agree = pos if c.version != entry else saved
    if bound_cid >= 0:
        _unbind(c, bound_cid, bound_blk)


def canonical_search(table_in, starts, seqs, others):
    """Run the canonical-form search from each prepared start element.

    ``starts`` lists the candidate elements for label 0, ``seqs[i]`` the
    sigma-cycle through starts[i] beginning there, and ``others[i]`` the
    remaining cycles (each following sigma) sorted so that block lengths are
    non-decreasing.  Returns the least table as a flat tuple.
    """
    cdef cnp.ndarray[cnp.int32_t, ndim=2] tab = np.ascontiguousarray(table_in, dtype=np.int32)
    cdef int n = tab.shape[0]
    cdef long nn = <long>n * n
    cdef Canon c
    cdef int si, i, k, x, pos_, start
    cdef list cyc
    c.n = n
    c.t = <int*>malloc(nn * sizeof(int))
    c.best = <int*>malloc(nn * sizeof(int))
    c.cur = <int*>malloc(nn * sizeof(int))
    c.lab = <int*>malloc(n * sizeof(int))
    c.inv = <int*>malloc(n * sizeof(int))
    c.cyc_of = <int*>malloc(n * sizeof(int))
    c.cyc_start = <int*>malloc(n * sizeof(int))
    c.cyc_len = <int*>malloc(n * sizeof(int))
    c.cyc_elems = <int*>malloc(n * sizeof(int))
    c.cyc_pos = <int*>malloc(n * sizeof(int))
    c.cyc_bound = <bint*>malloc(n * sizeof(bint))
    c.blk_start = <int*>malloc(n * sizeof(int))
    c.blk_len = <int*>malloc(n * sizeof(int))
    c.blk_free = <bint*>malloc(n * sizeof(bint))
    c.block_at = <int*>malloc(n * sizeof(int))
    c.has_best = False
    c.version = 0
    try:
        for i in range(n):
            for k in range(n):
                c.t[i * n + k] = tab[i, k]
        for si in range(len(starts)):
            seq = seqs[si]
            cyc = others[si]
            for x in range(n):
                c.lab[x] = -1
                c.inv[x] = -1
                c.block_at[x] = -1
            for i in range(len(seq)):
                c.lab[seq[i]] = i
                c.inv[i] = seq[i]
            c.ncyc = len(cyc)
            c.nblk = len(cyc)
            pos_ = 0
            start = len(seq)
            for i in range(c.ncyc):
                c.cyc_start[i] = pos_
                c.cyc_len[i] = len(cyc[i])
                c.cyc_bound[i] = False
                for k in range(len(cyc[i])):
                    x = cyc[i][k]
                    c.cyc_elems[pos_ + k] = x
                    c.cyc_of[x] = i
                    c.cyc_pos[x] = k
                pos_ += len(cyc[i])
                c.blk_start[i] = start
                c.blk_len[i] = len(cyc[i])
                c.blk_free[i] = True
                for k in range(len(cyc[i])):
                    c.block_at[start + k] = i
                start += len(cyc[i])
            # row 0 is the same for every start; fill it from sigma's cycle layout
            start = 0
            for i in range(len(seq)):
                c.cur[i] = (i + 1) % len(seq)
            start = len(seq)
            for i in range(c.ncyc):
                for k in range(c.cyc_len[i]):
                    c.cur[start + k] = start + (k + 1) % c.cyc_len[i]
                start += c.cyc_len[i]
            if c.has_best:
                c.agree = n
                for k in range(n):
                    if c.cur[k] != c.best[k]:
                        c.agree = 0
                        break
            else:
                c.agree = 0
            _canon_rec(&c, n)
        return tuple(c.best[k] for k in range(nn))
    finally:
        free(c.t); free(c.best); free(c.cur); free(c.lab); free(c.inv)
        free(c.cyc_of); free(c.cyc_start); free(c.cyc_len); free(c.cyc_elems)
        free(c.cyc_pos); free(c.cyc_bound); free(c.blk_start); free(c.blk_len)
        free(c.blk_free); free(c.block_at)
