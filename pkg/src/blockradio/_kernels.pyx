# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; same contract as ``_pykernels``.

The search loop runs without the GIL so independent first-vertex subtrees
can be explored from several threads.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

import numpy as np


def greedy_labels(dist, order, long k):
    cdef const long long[:, ::1] d = np.ascontiguousarray(dist, dtype=np.int64)
    cdef Py_ssize_t n = len(order), i, j
    cdef long long lab, t
    cdef const long long[::1] o = np.asarray(order, dtype=np.int64)
    out = np.zeros(n, dtype=np.int64)
    cdef long long[::1] labels = out
    for i in range(n):
        lab = labels[i - 1] + 1 if i > 0 else 0
        for j in range(i):
            t = labels[j] + k + 1 - d[o[j], o[i]]
            if t > lab:
                lab = t
        labels[i] = lab
    return [int(x) for x in out]


cdef long long _search(const long long[:, ::1] d, long k, const long long[::1] firsts,
                       long long best, long long* best_order, int* found) noexcept nogil:
    cdef Py_ssize_t p = d.shape[0]
    cdef Py_ssize_t nf = firsts.shape[0]
    cdef Py_ssize_t depth, j, fi, v, remaining
    cdef long long lab, t
    cdef long long* order = <long long*> malloc(p * sizeof(long long))
    cdef long long* labels = <long long*> malloc(p * sizeof(long long))
    cdef Py_ssize_t* cand = <Py_ssize_t*> malloc((p + 1) * sizeof(Py_ssize_t))
    cdef char* used = <char*> malloc(p * sizeof(char))
    cdef bint placed
    memset(used, 0, p)
    found[0] = 0
    for fi in range(nf):
        if p - 1 >= best:
            break
        v = firsts[fi]
        order[0] = v
        labels[0] = 0
        if p == 1:
            best = 0
            best_order[0] = v
            found[0] = 1
            break
        used[v] = 1
        depth = 1
        cand[1] = 0
        while depth > 0:
            placed = False
            remaining = p - 1 - depth
            while cand[depth] < p:
                v = cand[depth]
                cand[depth] += 1
                if used[v]:
                    continue
                lab = labels[depth - 1] + 1
                for j in range(depth):
                    t = labels[j] + k + 1 - d[order[j], v]
                    if t > lab:
                        lab = t
                if lab + remaining >= best:
                    continue
                order[depth] = v
                if remaining == 0:
                    best = lab
                    for j in range(p):
                        best_order[j] = order[j]
                    found[0] = 1
                    continue
                labels[depth] = lab
                used[v] = 1
                depth += 1
                cand[depth] = 0
                placed = True
                break
            if not placed:
                depth -= 1
                used[order[depth]] = 0
    free(order)
    free(labels)
    free(cand)
    free(used)
    return best


def exact_search(dist, long k, firsts, long long best_init):
    cdef const long long[:, ::1] d = np.ascontiguousarray(dist, dtype=np.int64)
    cdef const long long[::1] f = np.asarray(list(firsts), dtype=np.int64)
    cdef Py_ssize_t p = d.shape[0]
    out = np.zeros(max(p, 1), dtype=np.int64)
    cdef long long[::1] bo = out
    cdef int found = 0
    cdef long long best
    with nogil:
        best = _search(d, k, f, best_init, &bo[0], &found)
    if not found:
        return int(best_init), None
    return int(best), [int(x) for x in out[:p]]


def bfs_all(indptr, indices, Py_ssize_t p):
    cdef const long long[::1] ip = np.asarray(indptr, dtype=np.int64)
    cdef const long long[::1] ix = np.asarray(indices, dtype=np.int64)
    out = np.full((p, p), -1, dtype=np.int64)
    cdef long long[:, ::1] d = out
    cdef long long* queue = <long long*> malloc(max(p, 1) * sizeof(long long))
    cdef Py_ssize_t s, head, tail, e
    cdef long long x, y
    with nogil:
        for s in range(p):
            d[s, s] = 0
            queue[0] = s
            head = 0
            tail = 1
            while head < tail:
                x = queue[head]
                head += 1
                for e in range(ip[x], ip[x + 1]):
                    y = ix[e]
                    if d[s, y] < 0:
                        d[s, y] = d[s, x] + 1
                        queue[tail] = y
                        tail += 1
    free(queue)
    return out
