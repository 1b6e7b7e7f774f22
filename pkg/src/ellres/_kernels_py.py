"""Pure-numpy kernels, the fallback twin of the compiled ``_kernels``.

Same signatures, same semantics; selected by ``ellres._backend`` when the
compiled extension is absent or when ``ELLRES_BACKEND=python`` is set.
"""

import numpy as np


def mul(a, b):
    a = np.ascontiguousarray(a, dtype=np.complex128)
    b = np.ascontiguousarray(b, dtype=np.complex128)
    return np.convolve(a, b)[: a.shape[0]]


def inv(a):
    a = np.ascontiguousarray(a, dtype=np.complex128)
    n = a.shape[0]
    out = np.empty(n, dtype=np.complex128)
    c0 = a[0]
    out[0] = 1.0 / c0
    for k in range(1, n):
        out[k] = -np.dot(a[1 : k + 1], out[k - 1 :: -1]) / c0
    return out


def phi(z, order):
    out = np.zeros(order + 1, dtype=np.complex128)
    out[0] = 1.0
    for n in range(1, order + 1):
        out[n:] -= z * out[: order + 1 - n]
    return out


def eval_at(a, q0):
    acc = 0j
    for c in a[::-1]:
        acc = acc * q0 + c
    return acc
