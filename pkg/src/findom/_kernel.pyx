# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Gauss-Jordan elimination over F_p on int64 matrices (compiled path)."""

import numpy as np
cimport numpy as cnp

ctypedef long long i64


cdef inline i64 _inv(i64 a, i64 p):
    cdef i64 t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef inline i64 _mod(i64 a, i64 p):
    # C remainder keeps the sign of a under cdivision
    a = a % p
    return a + p if a < 0 else a


def rref_modp(M, i64 p):
    """Reduce a copy of ``M`` to reduced row echelon form mod ``p``.

    Returns ``(R, pivots)`` with ``pivots`` the pivot column indices.
    """
    cdef i64[:, ::1] A = np.ascontiguousarray(np.asarray(M, dtype=np.int64) % p)
    cdef Py_ssize_t nrows = A.shape[0], ncols = A.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef i64 inv, f
    pivots = []
    for c in range(ncols):
        if r >= nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if A[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, ncols):
                f = A[r, j]
                A[r, j] = A[piv, j]
                A[piv, j] = f
        inv = _inv(A[r, c], p)
        for j in range(c, ncols):
            A[r, j] = _mod(A[r, j] * inv, p)
        for i in range(nrows):
            if i != r and A[i, c] != 0:
                f = A[i, c]
                for j in range(c, ncols):
                    if A[r, j] != 0:
                        A[i, j] = _mod(A[i, j] - f * A[r, j], p)
        pivots.append(c)
        r += 1
    return np.asarray(A), pivots
