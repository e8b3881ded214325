# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Checked int64 matrix product; the hot loop behind every identity scan."""

import numpy as np
cimport numpy as cnp
from cython.parallel cimport prange

cnp.import_array()

cdef extern from *:
    """
    static inline int algkit_muladd(long long a, long long b, long long *acc) {
        long long p;
        if (__builtin_mul_overflow(a, b, &p)) return 1;
        if (__builtin_add_overflow(*acc, p, acc)) return 1;
        return 0;
    }
    """
    int algkit_muladd(long long a, long long b, long long *acc) nogil


def matmul_i64(const long long[:, ::1] a, const long long[:, ::1] b, int nthreads=1):
    """Exact a @ b in int64, or None if any partial sum overflows.

    Rows are independent, so the result does not depend on nthreads.
    """
    cdef Py_ssize_t n = a.shape[0], k = a.shape[1], m = b.shape[1]
    cdef Py_ssize_t i, j, p
    cdef long long aip
    out = np.zeros((n, m), dtype=np.int64)
    flags = np.zeros(n, dtype=np.int8)
    cdef long long[:, ::1] o = out
    cdef signed char[::1] f = flags
    if nthreads < 1:
        nthreads = 1
    for i in prange(n, nogil=True, num_threads=nthreads, schedule="static"):
        for p in range(k):
            aip = a[i, p]
            if aip == 0:
                continue
            for j in range(m):
                if b[p, j] != 0:
                    if algkit_muladd(aip, b[p, j], &o[i, j]):
                        f[i] = 1
    if flags.any():
        return None
    return out
