# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled profile kernels; same contract as ``_pykernels``."""

import numpy as np

from libc.stdint cimport int64_t


cdef void _column_counts(const int64_t[:] b, int64_t n, int64_t[:] counts) noexcept nogil:
    cdef Py_ssize_t i, j
    cdef int64_t v, run = 0
    for i in range(b.shape[0]):
        v = b[i]
        if v > n:
            v = n + 1
        counts[v] += 1
    for j in range(n + 1, -1, -1):
        run += counts[j]
        counts[j] = run


def noloop_profile(const int64_t[:] b):
    cdef int64_t n = b.shape[0]
    counts_arr = np.zeros(n + 2, dtype=np.int64)
    seen_arr = np.zeros(n + 2, dtype=np.int64)
    x_arr = np.empty(n, dtype=np.int64)
    cdef int64_t[:] counts = counts_arr
    cdef int64_t[:] seen = seen_arr
    cdef int64_t[:] x = x_arr
    cdef int64_t k, v, p = 0, p_next, xk = 0
    with nogil:
        _column_counts(b, n, counts)
        for k in range(n):
            v = b[k]
            if v > n:
                v = n + 1
            p_next = p + (1 if v >= k + 1 else 0)
            if k:
                p_next -= seen[k]
            seen[v] += 1
            xk += p + counts[k + 1] - p_next
            x[k] = xk
            p = p_next
    return x_arr


def loop_profile(const int64_t[:] b):
    cdef int64_t n = b.shape[0]
    counts_arr = np.zeros(n + 2, dtype=np.int64)
    x_arr = np.empty(n, dtype=np.int64)
    cdef int64_t[:] counts = counts_arr
    cdef int64_t[:] x = x_arr
    cdef int64_t k, xk = 0
    with nogil:
        _column_counts(b, n, counts)
        for k in range(n):
            xk += counts[k + 1]
            x[k] = xk
    return x_arr
