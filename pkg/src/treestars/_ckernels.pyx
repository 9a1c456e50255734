# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled forest DP kernels on int64.

Exact only while every count fits in a signed 64-bit word. A forest on ``n``
vertices has at most ``2**n`` independent sets, so callers must keep
``n <= MAX_N``; the dispatcher in ``treestars.kernels`` enforces this.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memset
from libc.stdint cimport int64_t

import numpy as np
cimport numpy as cnp

cnp.import_array()

MAX_N = 62


cdef void _conv_into(int64_t* a, int la, int64_t* b, int lb, int64_t* tmp) noexcept nogil:
    # a <- a * b, result length la + lb - 1 (caller tracks it)
    cdef int i, j
    memset(tmp, 0, (la + lb - 1) * sizeof(int64_t))
    for i in range(la):
        if a[i] != 0:
            for j in range(lb):
                tmp[i + j] += a[i] * b[j]
    for i in range(la + lb - 1):
        a[i] = tmp[i]


cdef int _forest_dp(int n, const int* indptr, const int* indices,
                    const unsigned char* alive, int64_t* out,
                    int64_t* inc, int64_t* exc, int* linc, int* lexc,
                    int* parent, int* order, unsigned char* visited,
                    int64_t* tmp, int64_t* summ) noexcept nogil:
    """Fill ``out[0..n]`` with size-indexed counts; returns used length."""
    cdef int w = n + 2
    cdef int root, head, tail, u, c, t, i, lo, ls, m
    cdef int64_t* iu
    cdef int64_t* eu
    memset(visited, 0, n)
    memset(out, 0, (n + 1) * sizeof(int64_t))
    out[0] = 1
    lo = 1
    for root in range(n):
        if not alive[root] or visited[root]:
            continue
        visited[root] = 1
        parent[root] = -1
        head = 0
        tail = 1
        order[0] = root
        while head < tail:
            u = order[head]
            head += 1
            for t in range(indptr[u], indptr[u + 1]):
                c = indices[t]
                if alive[c] and not visited[c]:
                    visited[c] = 1
                    parent[c] = u
                    order[tail] = c
                    tail += 1
        for i in range(tail - 1, -1, -1):
            u = order[i]
            iu = inc + u * w
            eu = exc + u * w
            iu[0] = 0
            iu[1] = 1
            linc[u] = 2
            eu[0] = 1
            lexc[u] = 1
            for t in range(indptr[u], indptr[u + 1]):
                c = indices[t]
                if not alive[c] or parent[c] != u or c == parent[u]:
                    continue
                # summ <- inc_c + exc_c
                ls = linc[c] if linc[c] > lexc[c] else lexc[c]
                for m in range(ls):
                    summ[m] = 0
                for m in range(linc[c]):
                    summ[m] += inc[c * w + m]
                for m in range(lexc[c]):
                    summ[m] += exc[c * w + m]
                _conv_into(iu, linc[u], exc + c * w, lexc[c], tmp)
                linc[u] += lexc[c] - 1
                _conv_into(eu, lexc[u], summ, ls, tmp)
                lexc[u] += ls - 1
        ls = linc[root] if linc[root] > lexc[root] else lexc[root]
        for m in range(ls):
            summ[m] = 0
        for m in range(linc[root]):
            summ[m] += inc[root * w + m]
        for m in range(lexc[root]):
            summ[m] += exc[root * w + m]
        _conv_into(out, lo, summ, ls, tmp)
        lo += ls - 1
    return lo


cdef class _Workspace:
    cdef int n
    cdef int64_t* inc
    cdef int64_t* exc
    cdef int64_t* tmp
    cdef int64_t* summ
    cdef int* linc
    cdef int* lexc
    cdef int* parent
    cdef int* order
    cdef unsigned char* visited

    def __cinit__(self, int n):
        cdef int w = n + 2
        self.n = n
        self.inc = <int64_t*> malloc(max(n, 1) * w * sizeof(int64_t))
        self.exc = <int64_t*> malloc(max(n, 1) * w * sizeof(int64_t))
        self.tmp = <int64_t*> malloc(2 * w * sizeof(int64_t))
        self.summ = <int64_t*> malloc(w * sizeof(int64_t))
        self.linc = <int*> malloc(max(n, 1) * sizeof(int))
        self.lexc = <int*> malloc(max(n, 1) * sizeof(int))
        self.parent = <int*> malloc(max(n, 1) * sizeof(int))
        self.order = <int*> malloc(max(n, 1) * sizeof(int))
        self.visited = <unsigned char*> malloc(max(n, 1))
        if (not self.inc or not self.exc or not self.tmp or not self.summ
                or not self.linc or not self.lexc or not self.parent
                or not self.order or not self.visited):
            raise MemoryError()

    def __dealloc__(self):
        free(self.inc)
        free(self.exc)
        free(self.tmp)
        free(self.summ)
        free(self.linc)
        free(self.lexc)
        free(self.parent)
        free(self.order)
        free(self.visited)


def _check_n(int n):
    if n > MAX_N:
        raise OverflowError(f"compiled kernel limited to n <= {MAX_N}, got {n}")


def forest_counts(indptr, indices, alive=None):
    """Independent-set counts by size on the alive part of a forest."""
    cdef cnp.int32_t[::1] ip = np.ascontiguousarray(indptr, dtype=np.int32)
    cdef cnp.int32_t[::1] ix = np.ascontiguousarray(indices, dtype=np.int32)
    cdef int n = ip.shape[0] - 1
    _check_n(n)
    cdef cnp.uint8_t[::1] al
    if alive is None:
        al = np.ones(n, dtype=np.uint8)
    else:
        al = np.ascontiguousarray(alive, dtype=np.uint8)
    out = np.zeros(n + 2, dtype=np.int64)
    cdef cnp.int64_t[::1] o = out
    cdef _Workspace ws = _Workspace(n)
    cdef const int* ixp = <const int*> &ix[0] if ix.shape[0] > 0 else NULL
    with nogil:
        _forest_dp(n, <const int*> &ip[0], ixp, <const unsigned char*> &al[0] if n > 0 else NULL,
                   <int64_t*> &o[0], ws.inc, ws.exc, ws.linc, ws.lexc,
                   ws.parent, ws.order, ws.visited, ws.tmp, ws.summ)
    return out[: n + 1].tolist()


def star_matrix(indptr, indices):
    """Row ``v``, column ``r``: number of independent ``r``-sets containing ``v``."""
    cdef cnp.int32_t[::1] ip = np.ascontiguousarray(indptr, dtype=np.int32)
    cdef cnp.int32_t[::1] ix = np.ascontiguousarray(indices, dtype=np.int32)
    cdef int n = ip.shape[0] - 1
    _check_n(n)
    if n == 0:
        return []
    res = np.zeros((n, n + 2), dtype=np.int64)
    cdef cnp.int64_t[:, ::1] r = res
    cdef cnp.uint8_t[::1] al = np.ones(n, dtype=np.uint8)
    cdef _Workspace ws = _Workspace(n)
    cdef int v, t
    cdef const int* ixp = <const int*> &ix[0] if ix.shape[0] > 0 else NULL
    with nogil:
        for v in range(n):
            al[v] = 0
            for t in range(ip[v], ip[v + 1]):
                al[ix[t]] = 0
            # column r holds N_{r-1}(G - N[v]), so write shifted by one
            _forest_dp(n, <const int*> &ip[0], ixp, <const unsigned char*> &al[0],
                       <int64_t*> &r[v, 1], ws.inc, ws.exc, ws.linc, ws.lexc,
                       ws.parent, ws.order, ws.visited, ws.tmp, ws.summ)
            al[v] = 1
            for t in range(ip[v], ip[v + 1]):
                al[ix[t]] = 1
    return res[:, : n + 1].tolist()
