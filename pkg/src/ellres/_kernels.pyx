# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for truncated q-series arithmetic.

These are the hot inner loops: Cauchy products, series inversion and the
q-Pochhammer coefficient recurrence.  The pure-Python twin lives in
``_kernels_py`` and must stay behaviourally identical.
"""

import numpy as np


def mul(a, b):
    """Cauchy product of two coefficient vectors, truncated to len(a)."""
    cdef const double complex[::1] av = np.ascontiguousarray(a, dtype=np.complex128)
    cdef const double complex[::1] bv = np.ascontiguousarray(b, dtype=np.complex128)
    out = np.empty(av.shape[0], dtype=np.complex128)
    cdef double complex[::1] ov = out
    cdef Py_ssize_t n = av.shape[0]
    cdef Py_ssize_t k, j
    cdef double complex acc
    for k in range(n):
        acc = 0
        for j in range(k + 1):
            acc = acc + av[j] * bv[k - j]
        ov[k] = acc
    return out


def inv(a):
    """Multiplicative inverse of a coefficient vector with a[0] != 0."""
    cdef const double complex[::1] av = np.ascontiguousarray(a, dtype=np.complex128)
    out = np.empty(av.shape[0], dtype=np.complex128)
    cdef double complex[::1] ov = out
    cdef Py_ssize_t n = av.shape[0]
    cdef Py_ssize_t k, j
    cdef double complex c0 = av[0]
    cdef double complex acc
    ov[0] = 1.0 / c0
    for k in range(1, n):
        acc = 0
        for j in range(1, k + 1):
            acc = acc + av[j] * ov[k - j]
        ov[k] = -acc / c0
    return out


def phi(double complex z, Py_ssize_t order):
    """Coefficients of prod_{n=1..order} (1 - q^n z) up to q^order."""
    out = np.zeros(order + 1, dtype=np.complex128)
    cdef double complex[::1] ov = out
    cdef Py_ssize_t n, k
    ov[0] = 1.0
    for n in range(1, order + 1):
        # descending k keeps the pre-update value at k - n
        for k in range(order, n - 1, -1):
            ov[k] = ov[k] - z * ov[k - n]
    return out


def eval_at(a, double complex q0):
    """Horner evaluation of a coefficient vector at a numeric q0."""
    cdef const double complex[::1] av = np.ascontiguousarray(a, dtype=np.complex128)
    cdef Py_ssize_t k
    cdef double complex acc = 0
    for k in range(av.shape[0] - 1, -1, -1):
        acc = acc * q0 + av[k]
    return acc
