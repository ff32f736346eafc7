# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels; see ``_pykernels`` for the contract."""

from libc.stdlib cimport malloc, free

BACKEND = "cython"

ctypedef unsigned long long mask_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int popcount(mask_t s) nogil:
    return __builtin_popcountll(s)


cdef inline int lowbit_index(mask_t s) nogil:
    return __builtin_ctzll(s)


def rank_table(int n, bases):
    cdef mask_t size = (<mask_t>1) << n
    cdef mask_t s, t, low
    cdef unsigned char r, best
    cdef bytearray out = bytearray(size)
    cdef unsigned char[::1] rank = out
    cdef unsigned char *indep = <unsigned char *>malloc(size)
    if indep == NULL:
        raise MemoryError()
    try:
        for s in range(size):
            indep[s] = 0
        for b in bases:
            indep[<mask_t>b] = 1
        with nogil:
            s = size - 1
            while s > 0:
                if indep[s]:
                    t = s
                    while t:
                        low = t & (~t + 1)
                        indep[s ^ low] = 1
                        t ^= low
                s -= 1
            for s in range(1, size):
                if indep[s]:
                    rank[s] = popcount(s)
                else:
                    best = 0
                    t = s
                    while t:
                        low = t & (~t + 1)
                        r = rank[s ^ low]
                        if r > best:
                            best = r
                        t ^= low
                    rank[s] = best
    finally:
        free(indep)
    return out


def minimal_dependent_sets(int n, rank_buf):
    cdef const unsigned char[::1] rank = rank_buf
    cdef mask_t size = (<mask_t>1) << n
    cdef mask_t s, t, low
    cdef int k
    cdef bint ok
    out = []
    for s in range(1, size):
        k = popcount(s)
        if rank[s] != k - 1:
            continue
        t = s
        ok = True
        while t:
            low = t & (~t + 1)
            if rank[s ^ low] != k - 1:
                ok = False
                break
            t ^= low
        if ok:
            out.append(s)
    return out


def closed_sets(int n, rank_buf):
    cdef const unsigned char[::1] rank = rank_buf
    cdef mask_t size = (<mask_t>1) << n
    cdef mask_t full = size - 1
    cdef mask_t s, t, low
    cdef unsigned char r
    cdef bint ok
    out = []
    for s in range(size):
        r = rank[s]
        t = full ^ s
        ok = True
        while t:
            low = t & (~t + 1)
            if rank[s | low] == r:
                ok = False
                break
            t ^= low
        if ok:
            out.append(s)
    return out


cdef long *_long_array(seq, Py_ssize_t n) except NULL:
    cdef long *a = <long *>malloc(max(n, 1) * sizeof(long))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        a[i] = seq[i]
    return a


def blue_keys(int n, cocircuits, keys):
    cdef long *k = _long_array(keys, n)
    cdef long *best = <long *>malloc(max(n, 1) * sizeof(long))
    cdef mask_t c, t
    cdef long m, v
    cdef int i
    try:
        for i in range(n):
            best[i] = -1
        for cc in cocircuits:
            c = cc
            m = -1
            t = c
            while t:
                v = k[lowbit_index(t)]
                if m < 0 or v < m:
                    m = v
                t &= t - 1
            t = c
            while t:
                i = lowbit_index(t)
                if m > best[i]:
                    best[i] = m
                t &= t - 1
        return [k[i] if best[i] < 0 else best[i] for i in range(n)]
    finally:
        free(k)
        free(best)


def red_keys(int n, circuits, keys):
    cdef long *k = _long_array(keys, n)
    cdef long *out = _long_array(keys, n)
    cdef mask_t c, t
    cdef long top, second, v
    cdef int count, i
    try:
        for cc in circuits:
            c = cc
            if not (c & (c - 1)):
                continue
            top = -1
            second = -1
            count = 0
            t = c
            while t:
                v = k[lowbit_index(t)]
                if v > top:
                    second = top
                    top = v
                    count = 1
                elif v == top:
                    count += 1
                elif v > second:
                    second = v
                t &= t - 1
            t = c
            while t:
                i = lowbit_index(t)
                if k[i] == top and count == 1:
                    v = second
                else:
                    v = top
                if v < out[i]:
                    out[i] = v
                t &= t - 1
        return [out[i] for i in range(n)]
    finally:
        free(k)
        free(out)


def first_unique_max(circuits, keys):
    cdef Py_ssize_t n = len(keys)
    cdef long *k = _long_array(keys, n)
    cdef mask_t c, t
    cdef long top, v
    cdef int count
    cdef Py_ssize_t idx = 0
    try:
        for cc in circuits:
            c = cc
            top = -1
            count = 0
            t = c
            while t:
                v = k[lowbit_index(t)]
                if v > top:
                    top = v
                    count = 1
                elif v == top:
                    count += 1
                t &= t - 1
            if count == 1:
                return idx
            idx += 1
        return -1
    finally:
        free(k)
