"""Truncated power series in the elliptic modulus q, over complex doubles.

``QSeries`` is the universal value type of the package: genera, contour
integrals and theta functions are all series of this kind.  A series stores
the coefficients of q^0 .. q^Q for a fixed truncation order Q; every ring
operation truncates back to that order.  Mixing different orders is an
error rather than a silent promotion, because in this codebase an order
mismatch always indicates a bug in a caller.

Values are immutable after construction, so they can be shared freely
across threads and cached without defensive copies.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import _backend
from .errors import NonUnitSeriesError, OrderMismatchError

#: Relative floor used by :meth:`QSeries.inv`: the constant term must exceed
#: INV_FLOOR_REL times the largest coefficient magnitude of the operand.
#: This separates structural zeros (theta at z = 1) from conditioning noise.
INV_FLOOR_REL = 1e-12

_Scalar = (int, float, complex, np.integer, np.floating, np.complexfloating)


class QSeries:
    """A complex power series in q truncated at a fixed order."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[complex] | np.ndarray):
        arr = np.asarray(coeffs, dtype=np.complex128)
        if arr.ndim != 1 or arr.shape[0] == 0:
            raise ValueError("QSeries needs a non-empty 1-d coefficient vector")
        arr = np.array(arr, copy=True)
        arr.setflags(write=False)
        self._coeffs = arr

    # -- construction -----------------------------------------------------

    @classmethod
    def constant(cls, value: complex, order: int) -> "QSeries":
        c = np.zeros(order + 1, dtype=np.complex128)
        c[0] = value
        return cls(c)

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls(np.zeros(order + 1, dtype=np.complex128))

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls.constant(1.0, order)

    @classmethod
    def variable(cls, order: int) -> "QSeries":
        """The series q itself (requires order >= 1)."""
        if order < 1:
            raise ValueError("order must be >= 1 to represent q")
        c = np.zeros(order + 1, dtype=np.complex128)
        c[1] = 1.0
        return cls(c)

    # -- basic queries -----------------------------------------------------

    @property
    def order(self) -> int:
        return self._coeffs.shape[0] - 1

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only coefficient vector of length order + 1."""
        return self._coeffs

    def coeff(self, k: int) -> complex:
        return complex(self._coeffs[k])

    def max_abs(self) -> float:
        return float(np.max(np.abs(self._coeffs)))

    def eval_at(self, q0: complex) -> complex:
        """Collapse the truncated series at a numeric modulus q0."""
        return complex(_backend.eval_at(self._coeffs, complex(q0)))

    def __iter__(self):
        return iter(self._coeffs)

    def __len__(self) -> int:
        return self._coeffs.shape[0]

    def __repr__(self) -> str:
        head = ", ".join(f"{c:.6g}" for c in self._coeffs[:4])
        tail = ", ..." if self.order >= 4 else ""
        return f"QSeries(Q={self.order}; [{head}{tail}])"

    # -- ring arithmetic ---------------------------------------------------

    def _check_order(self, other: "QSeries") -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"series orders differ: {self.order} vs {other.order}"
            )

    def __add__(self, other):
        if isinstance(other, QSeries):
            self._check_order(other)
            return QSeries(self._coeffs + other._coeffs)
        if isinstance(other, _Scalar):
            c = np.array(self._coeffs)
            c[0] += other
            return QSeries(c)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return QSeries(-self._coeffs)

    def __sub__(self, other):
        if isinstance(other, QSeries):
            self._check_order(other)
            return QSeries(self._coeffs - other._coeffs)
        if isinstance(other, _Scalar):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QSeries):
            self._check_order(other)
            return QSeries(_backend.mul(self._coeffs, other._coeffs))
        if isinstance(other, _Scalar):
            return QSeries(self._coeffs * complex(other))
        return NotImplemented

    __rmul__ = __mul__

    def inv(self) -> "QSeries":
        """Multiplicative inverse, truncated; requires a well-sized constant term."""
        scale = self.max_abs()
        floor = INV_FLOOR_REL * scale
        c0 = abs(self._coeffs[0])
        if not c0 > floor:
            raise NonUnitSeriesError(
                f"non-unit series: |constant term| = {c0:.3e} <= floor {floor:.3e}",
                magnitude=c0,
            )
        return QSeries(_backend.inv(self._coeffs))

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return self * other.inv()
        if isinstance(other, _Scalar):
            return QSeries(self._coeffs / complex(other))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, _Scalar):
            return self.inv() * other
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, (int, np.integer)):
            return NotImplemented
        base = self if exponent >= 0 else self.inv()
        result = QSeries.one(self.order)
        for _ in range(abs(int(exponent))):
            result = result * base
        return result


# -- free-function aliases matching the operation-level contract ------------


def qs_add(a: QSeries, b: QSeries) -> QSeries:
    return a + b


def qs_mul(a: QSeries, b) -> QSeries:
    return a * b


def qs_neg(a: QSeries) -> QSeries:
    return -a


def qs_scale(a: QSeries, factor) -> QSeries:
    """Multiply by a scalar or, for convenience, by another series."""
    return a * factor


def qs_inv(a: QSeries) -> QSeries:
    return a.inv()


def product(series: Iterable[QSeries], order: int) -> QSeries:
    out = QSeries.one(order)
    for s in series:
        out = out * s
    return out


def max_abs_diff(a: QSeries, b: QSeries) -> float:
    a._check_order(b)
    return float(np.max(np.abs(a.coeffs - b.coeffs)))


def rel_diff(a: QSeries, b: QSeries) -> float:
    """Max coefficient deviation relative to the larger of the two scales."""
    scale = max(a.max_abs(), b.max_abs())
    if scale == 0.0:
        return 0.0
    return max_abs_diff(a, b) / scale
