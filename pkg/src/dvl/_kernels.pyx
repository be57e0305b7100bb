# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops for the exhaustive sign-pattern searches.

Masks are walked in natural order.  Going from m to m + 1 flips exactly the
bits of m ^ (m + 1), so the running products y = A f are updated with about
two column additions per step.  Bit i set means f(i + 1) = -1.
"""
import numpy as np
cimport numpy as cnp

ctypedef long long i64


cdef inline void _init(const i64[:, ::1] A, i64 mask, int nbits, i64[::1] y):
    cdef Py_ssize_t r, i
    for r in range(A.shape[0]):
        y[r] = 0
        for i in range(nbits):
            if (mask >> i) & 1:
                y[r] -= A[r, i]
            else:
                y[r] += A[r, i]


def brute_scan(const i64[:, ::1] A, i64 start, i64 stop, int nbits, bint pole,
               bint zero_sum_only, i64[::1] hits):
    """Classify every mask in [start, stop).

    A holds integer rows whose common kernel is the vanishing set.  With
    pole set (k = 1) a mask whose popcount differs from nbits / 2 has a
    nonzero period sum and counts as divergent.  Returns (divergent,
    nonvanishing, vanishing, skipped); vanishing masks go into hits as far
    as capacity allows.
    """
    cdef Py_ssize_t rows = A.shape[0], r, i
    cdef i64[::1] y = np.zeros(max(rows, 1), dtype=np.int64)
    cdef i64 m, flips, divergent = 0, nonvan = 0, van = 0, skipped = 0
    cdef i64 cap = hits.shape[0]
    cdef int pc, half2 = nbits
    cdef bint ok
    if start >= stop:
        return 0, 0, 0, 0
    _init(A, start, nbits, y)
    pc = 0
    for i in range(nbits):
        pc += (start >> i) & 1
    m = start
    while True:
        if pole and 2 * pc != half2:
            if zero_sum_only:
                skipped += 1
            else:
                divergent += 1
        else:
            ok = True
            for r in range(rows):
                if y[r] != 0:
                    ok = False
                    break
            if ok:
                if van < cap:
                    hits[van] = m
                van += 1
            else:
                nonvan += 1
        if m + 1 >= stop:
            break
        flips = m ^ (m + 1)
        m += 1
        i = 0
        while flips:
            if flips & 1:
                if (m >> i) & 1:
                    pc += 1
                    for r in range(rows):
                        y[r] -= 2 * A[r, i]
                else:
                    pc -= 1
                    for r in range(rows):
                        y[r] += 2 * A[r, i]
            flips >>= 1
            i += 1
    return divergent, nonvan, van, skipped


def kernel_scan(const i64[:, ::1] B, i64 L, i64 start, i64 stop, int nbits, i64[::1] hits):
    """Walk free-variable masks in [start, stop); keep those where every
    pivot value -B g / L is +-1, i.e. |(B g)_j| = L for all j.  Returns the
    number of hits."""
    cdef Py_ssize_t rows = B.shape[0], r, i
    cdef i64[::1] y = np.zeros(max(rows, 1), dtype=np.int64)
    cdef i64 m, flips, found = 0, cap = hits.shape[0], v
    cdef bint ok
    if start >= stop:
        return 0
    _init(B, start, nbits, y)
    m = start
    while True:
        ok = True
        for r in range(rows):
            v = y[r]
            if v != L and v != -L:
                ok = False
                break
        if ok:
            if found < cap:
                hits[found] = m
            found += 1
        if m + 1 >= stop:
            break
        flips = m ^ (m + 1)
        m += 1
        i = 0
        while flips:
            if flips & 1:
                if (m >> i) & 1:
                    for r in range(rows):
                        y[r] -= 2 * B[r, i]
                else:
                    for r in range(rows):
                        y[r] += 2 * B[r, i]
            flips >>= 1
            i += 1
    return found
