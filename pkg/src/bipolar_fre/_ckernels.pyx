# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_kernels_py``; same signatures, same results."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free, qsort

cdef extern from *:
    int __builtin_popcountll(unsigned long long x) nogil

cdef int MAX_WIDTH = 62


cdef uint64_t* _to_array(object values, Py_ssize_t n) except NULL:
    cdef uint64_t* arr = <uint64_t*> malloc(max(n, 1) * sizeof(uint64_t))
    if arr == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        arr[i] = <uint64_t> values[i]
    return arr


cdef inline bint _covers(const uint64_t* a, const uint64_t* b, Py_ssize_t n,
                         uint64_t sa, uint64_t sb) nogil:
    cdef Py_ssize_t i
    for i in range(n):
        if (a[i] & sa) == 0 and (b[i] & sb) == 0:
            return False
    return True


def sweep_family(own, other, int m, eq):
    if m > MAX_WIDTH:
        raise OverflowError("compiled kernel supports at most 62 columns")
    cdef Py_ssize_t n = len(own)
    cdef uint64_t* a = _to_array(own, n)
    cdef uint64_t* b
    try:
        b = _to_array(other, n)
    except MemoryError:
        free(a)
        raise
    cdef uint64_t full = ((<uint64_t> 1) << m) - 1
    cdef uint64_t e = <uint64_t> eq
    cdef uint64_t J, stop = (<uint64_t> 1) << m
    out = []
    try:
        J = 0
        while J < stop:
            if _covers(a, b, n, J, (full & ~J) | e):
                out.append(J)
            J += 1
    finally:
        free(a)
        free(b)
    return out


def find_assignment(plus, minus, int m, eq):
    if m > MAX_WIDTH:
        raise OverflowError("compiled kernel supports at most 62 columns")
    cdef Py_ssize_t n = len(plus)
    cdef uint64_t* a = _to_array(plus, n)
    cdef uint64_t* b
    try:
        b = _to_array(minus, n)
    except MemoryError:
        free(a)
        raise
    cdef uint64_t full = ((<uint64_t> 1) << m) - 1
    cdef uint64_t e = <uint64_t> eq
    cdef uint64_t fr = full & ~e
    cdef uint64_t sub = 0
    cdef long long found = -1
    with nogil:
        while True:
            if _covers(a, b, n, sub | e, (fr & ~sub) | e):
                found = <long long> (sub | e)
                break
            sub = (sub - fr) & fr
            if sub == 0:
                break
    free(a)
    free(b)
    return found


cdef int _by_popcount_desc(const void* p, const void* q) noexcept nogil:
    cdef uint64_t x = (<const uint64_t*> p)[0]
    cdef uint64_t y = (<const uint64_t*> q)[0]
    cdef int cx = __builtin_popcountll(x)
    cdef int cy = __builtin_popcountll(y)
    if cx != cy:
        return cy - cx
    if x < y:
        return -1
    if x > y:
        return 1
    return 0


def maximal_masks(masks):
    uniq = sorted(set(masks))
    cdef Py_ssize_t k = len(uniq)
    cdef uint64_t* arr = _to_array(uniq, k)
    cdef uint64_t* top = <uint64_t*> malloc(max(k, 1) * sizeof(uint64_t))
    if top == NULL:
        free(arr)
        raise MemoryError()
    cdef Py_ssize_t i, t, ntop = 0
    cdef bint dominated
    cdef uint64_t s
    with nogil:
        qsort(arr, k, sizeof(uint64_t), _by_popcount_desc)
        for i in range(k):
            s = arr[i]
            dominated = False
            for t in range(ntop):
                if (s & top[t]) == s:
                    dominated = True
                    break
            if not dominated:
                top[ntop] = s
                ntop += 1
    out = [top[t] for t in range(ntop)]
    free(arr)
    free(top)
    return out
