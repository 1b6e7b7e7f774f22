"""q-Pochhammer and normalized odd Jacobi theta series at numeric arguments.

The two building blocks are

    phi(z)   = prod_{n >= 1} (1 - q^n z)
    theta(z) = (1 - z^{-1}) * phi(z) * phi(z^{-1})

with z a fixed nonzero complex number and q the formal series variable.
This is the product normalization that satisfies the q-difference equation

    theta(q z) = -(q z)^{-1} theta(z)

and the inversion symmetry theta(z^{-1}) = -z * theta(z); every identity
verified by the suites rides on those two facts.  Truncating the product at
n = Q is exact to order Q because the factor for n contributes only q^n and
higher.

``theta_prime_at_one`` is the z-derivative of theta at z = 1, which the
product form gives in closed form as phi(1)^2: the prefactor (1 - z^{-1})
kills every term of the product rule except the one differentiating the
prefactor itself.  It normalizes all simple-pole residues downstream.
"""

from __future__ import annotations

from typing import Sequence, Tuple

import numpy as np

from . import _backend
from .errors import NonUnitSeriesError
from .qseries import QSeries

#: Signed root: (value, +1) contributes a factor, (value, -1) its inverse.
SignedRoot = Tuple[complex, int]


def phi_series(z: complex, order: int) -> QSeries:
    """The truncated q-Pochhammer product prod_{n=1..Q} (1 - q^n z)."""
    return QSeries(_backend.phi(complex(z), order))


def theta_series(z: complex, order: int) -> QSeries:
    """Normalized odd theta (1 - 1/z) phi(z) phi(1/z) as a QSeries.

    Vanishes identically at z = 1 (simple zero of the analytic function);
    z = 0 is rejected.
    """
    z = complex(z)
    if z == 0:
        raise ValueError("theta_series requires z != 0")
    prefactor = 1.0 - 1.0 / z
    if prefactor == 0.0:
        return QSeries.zero(order)
    prod = _backend.mul(_backend.phi(z, order), _backend.phi(1.0 / z, order))
    return QSeries(prefactor * prod)


def theta_prime_at_one(order: int) -> QSeries:
    """d theta / dz at z = 1, i.e. phi(1)^2 as a q-series."""
    p1 = _backend.phi(1.0, order)
    return QSeries(_backend.mul(p1, p1))


def theta_ratio(y: complex, z: complex, order: int) -> QSeries:
    """theta(y z) / theta(z), the per-weight localization factor."""
    return theta_series(complex(y) * complex(z), order) * theta_series(z, order).inv()


def _product_of(
    factory, roots: Sequence[SignedRoot], order: int, label: str
) -> QSeries:
    out = QSeries.one(order)
    for value, sign in roots:
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign!r}")
        factor = factory(value, order)
        if sign == -1:
            try:
                factor = factor.inv()
            except NonUnitSeriesError as exc:
                raise NonUnitSeriesError(
                    f"non-invertible negative-sign {label} factor at root "
                    f"{value!r}: {exc}",
                    magnitude=exc.magnitude,
                ) from exc
        out = out * factor
    return out


def theta_of_roots(roots: Sequence[SignedRoot], order: int) -> QSeries:
    """prod theta(root)^sign over a signed root list (virtual bundles)."""
    return _product_of(theta_series, roots, order, "theta")


def phi_of_roots(roots: Sequence[SignedRoot], order: int) -> QSeries:
    """prod phi(root)^sign, the Pochhammer companion of theta_of_roots."""
    return _product_of(phi_series, roots, order, "phi")


# -- batched evaluation (quadrature hot path) --------------------------------
#
# The contour quadrature evaluates the same theta ratios at hundreds of
# nodes.  These helpers vectorize the recurrences across a node axis with
# plain numpy; they are fast under either kernel backend.


def phi_batch(z: np.ndarray, order: int) -> np.ndarray:
    """phi coefficients for a vector of arguments; shape (len(z), Q+1)."""
    z = np.asarray(z, dtype=np.complex128)
    out = np.zeros((z.shape[0], order + 1), dtype=np.complex128)
    out[:, 0] = 1.0
    for n in range(1, order + 1):
        out[:, n:] -= z[:, None] * out[:, : order + 1 - n]
    return out


def mul_batch(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Row-wise truncated Cauchy product of (nodes, Q+1) coefficient blocks."""
    q1 = a.shape[1]
    out = np.zeros_like(a)
    for j in range(q1):
        out[:, j:] += a[:, j : j + 1] * b[:, : q1 - j]
    return out


def inv_batch(a: np.ndarray) -> np.ndarray:
    """Row-wise series inverse; every row needs a nonzero constant term."""
    q1 = a.shape[1]
    out = np.empty_like(a)
    c0 = a[:, 0]
    out[:, 0] = 1.0 / c0
    for k in range(1, q1):
        acc = np.einsum("nj,nj->n", a[:, 1 : k + 1], out[:, k - 1 :: -1][:, : k])
        out[:, k] = -acc / c0
    return out


def theta_batch(z: np.ndarray, order: int) -> np.ndarray:
    z = np.asarray(z, dtype=np.complex128)
    pref = (1.0 - 1.0 / z)[:, None]
    return pref * mul_batch(phi_batch(z, order), phi_batch(1.0 / z, order))


def theta_ratio_batch(y: complex, z: np.ndarray, order: int) -> np.ndarray:
    """theta(y z)/theta(z) row-wise for a vector of z."""
    return mul_batch(theta_batch(complex(y) * z, order), inv_batch(theta_batch(z, order)))
