# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled antichain pruning kernel.

Same contract as ``_kernels_py.minimal_indices``; selected at import time
by ``backend`` when the extension built successfully.
"""

import numpy as np

cimport numpy as cnp


def minimal_indices(vecs):
    """Indices of the divisibility-minimal vectors among ``vecs``."""
    cdef cnp.ndarray[cnp.int64_t, ndim=2] arr = np.asarray(vecs, dtype=np.int64)
    cdef Py_ssize_t k = arr.shape[0]
    cdef Py_ssize_t n = arr.shape[1]
    if k == 0:
        return []
    cdef cnp.ndarray[cnp.int64_t, ndim=1] degs = arr.sum(axis=1)
    # Stable sort on degree; equal-degree ties never dominate each other,
    # so their relative order is irrelevant for correctness.
    cdef cnp.ndarray[cnp.int64_t, ndim=1] order = np.argsort(degs, kind="stable").astype(np.int64)

    cdef cnp.int64_t[:, ::1] a = np.ascontiguousarray(arr)
    cdef cnp.int64_t[::1] deg = degs
    cdef cnp.int64_t[::1] ordv = order
    cdef cnp.ndarray[cnp.int64_t, ndim=1] kept_arr = np.empty(k, dtype=np.int64)
    cdef cnp.int64_t[::1] kept = kept_arr
    cdef Py_ssize_t nkept = 0
    cdef Py_ssize_t pos, j, p
    cdef cnp.int64_t i, jj
    cdef cnp.int64_t d
    cdef bint dominated, div

    for pos in range(k):
        i = ordv[pos]
        d = deg[i]
        dominated = False
        for j in range(nkept):
            jj = kept[j]
            if deg[jj] >= d:
                break
            div = True
            for p in range(n):
                if a[jj, p] > a[i, p]:
                    div = False
                    break
            if div:
                dominated = True
                break
        if not dominated:
            kept[nkept] = i
            nkept += 1

    return sorted(kept_arr[:nkept].tolist())
