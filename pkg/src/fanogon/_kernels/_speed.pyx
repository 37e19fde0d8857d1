# cython: language_level=3
"""Compiled twins of the pure-Python kernels (C long long arithmetic).

The dispatcher in ``fanogon._kernels`` only routes calls here when every
input is small enough that all intermediate products fit ``int64``; the
semantics are defined by ``fanogon._kernels.pure``.
"""

from libc.stdlib cimport free, malloc


cdef inline long long _floor_div(long long a, long long b) noexcept:
    # Correct under both C (truncating) and Python (flooring) division.
    cdef long long q = a // b
    cdef long long r = a - q * b
    if r != 0 and ((r < 0) != (b < 0)):
        q -= 1
    return q


cdef inline long long _ceil_div(long long a, long long b) noexcept:
    cdef long long q = a // b
    cdef long long r = a - q * b
    if r != 0 and ((r < 0) == (b < 0)):
        q += 1
    return q


cdef struct Row:
    long long lo
    long long hi


cdef inline Row _row_interval(long long lo, long long hi,
                              long long *ca, long long *cb, long long *cc,
                              Py_ssize_t n, long long y) noexcept:
    cdef Row out
    cdef Py_ssize_t j
    cdef long long rhs
    for j in range(n):
        rhs = cc[j] - cb[j] * y
        if ca[j] > 0:
            if _ceil_div(rhs, ca[j]) > lo:
                lo = _ceil_div(rhs, ca[j])
        elif ca[j] < 0:
            if _floor_div(rhs, ca[j]) < hi:
                hi = _floor_div(rhs, ca[j])
        elif rhs > 0:
            out.lo = 1
            out.hi = 0
            return out
        if lo > hi:
            break
    out.lo = lo
    out.hi = hi
    return out


cdef class _Rows:
    cdef long long *ca
    cdef long long *cb
    cdef long long *cc
    cdef Py_ssize_t n

    def __cinit__(self, Py_ssize_t n):
        self.ca = <long long *> malloc(n * sizeof(long long))
        self.cb = <long long *> malloc(n * sizeof(long long))
        self.cc = <long long *> malloc(n * sizeof(long long))
        if self.ca == NULL or self.cb == NULL or self.cc == NULL:
            raise MemoryError()
        self.n = n

    def __dealloc__(self):
        free(self.ca)
        free(self.cb)
        free(self.cc)


def scan_dilation_points(vxs, vys, long long k):
    cdef Py_ssize_t n = len(vxs)
    cdef _Rows rows = _Rows(n)
    cdef Py_ssize_t i, nxt
    cdef long long ax, ay, ex, ey, x0, x1, y0, y1, y, x
    cdef Row r
    x0 = x1 = k * <long long> vxs[0]
    y0 = y1 = k * <long long> vys[0]
    for i in range(n):
        nxt = (i + 1) % n
        ax = k * <long long> vxs[i]
        ay = k * <long long> vys[i]
        ex = k * <long long> vxs[nxt] - ax
        ey = k * <long long> vys[nxt] - ay
        rows.ca[i] = -ey
        rows.cb[i] = ex
        rows.cc[i] = ex * ay - ey * ax
        if ax < x0: x0 = ax
        if ax > x1: x1 = ax
        if ay < y0: y0 = ay
        if ay > y1: y1 = ay
    out = []
    for y in range(y0, y1 + 1):
        r = _row_interval(x0, x1, rows.ca, rows.cb, rows.cc, n, y)
        for x in range(r.lo, r.hi + 1):
            out.append((x, y))
    out.sort()
    return out


cdef _Rows _dual_rows(vxs, vys, long long k):
    cdef Py_ssize_t n = len(vxs)
    cdef _Rows rows = _Rows(n)
    cdef Py_ssize_t i
    for i in range(n):
        rows.ca[i] = <long long> vxs[i]
        rows.cb[i] = <long long> vys[i]
        rows.cc[i] = -k
    return rows


def count_dual_points(vxs, vys, long long k,
                      long long x0, long long x1, long long y0, long long y1):
    cdef _Rows rows = _dual_rows(vxs, vys, k)
    cdef long long y, total = 0
    cdef Row r
    for y in range(y0, y1 + 1):
        r = _row_interval(x0, x1, rows.ca, rows.cb, rows.cc, rows.n, y)
        if r.hi >= r.lo:
            total += r.hi - r.lo + 1
    return total


def list_dual_points(vxs, vys, long long k,
                     long long x0, long long x1, long long y0, long long y1):
    cdef _Rows rows = _dual_rows(vxs, vys, k)
    cdef long long y, x
    cdef Row r
    out = []
    for y in range(y0, y1 + 1):
        r = _row_interval(x0, x1, rows.ca, rows.cb, rows.cc, rows.n, y)
        for x in range(r.lo, r.hi + 1):
            out.append((x, y))
    out.sort()
    return out
