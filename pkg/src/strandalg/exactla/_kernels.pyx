# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mod-p row reduction. Same contract as ``_kernels_py.rref_modp``."""

import numpy as np


cdef long long _inv(long long a, long long p):
    cdef long long t = 0, nt = 1, r = p, nr = a, q, tmp
    while nr != 0:
        q = r // nr
        tmp = t - q * nt
        t = nt
        nt = tmp
        tmp = r - q * nr
        r = nr
        nr = tmp
    if t < 0:
        t += p
    return t


cdef list _rref(long long[:, ::1] a, long long p):
    cdef Py_ssize_t m = a.shape[0], n = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef long long inv, f, tmp
    cdef list pivots = []
    for c in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, n):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        inv = _inv(a[r, c], p)
        if inv != 1:
            for j in range(c, n):
                a[r, j] = a[r, j] * inv % p
        for i in range(m):
            f = a[i, c]
            if i != r and f != 0:
                f = p - f
                for j in range(c, n):
                    if a[r, j] != 0:
                        a[i, j] = (a[i, j] + f * a[r, j]) % p
        pivots.append(c)
        r += 1
    return pivots


def rref_modp(a, long long p):
    """Row-reduce a list of int rows mod p in place; returns pivot columns."""
    if p >= (1 << 31):
        raise OverflowError("compiled kernel needs p < 2**31")
    m = len(a)
    if m == 0 or len(a[0]) == 0:
        return []
    arr = np.ascontiguousarray(np.array(a, dtype=np.int64))
    pivots = _rref(arr, p)
    rows = arr.tolist()
    for i in range(m):
        a[i] = rows[i]
    return pivots
