import numpy as np
import pytest

from ellres.errors import NonUnitSeriesError, OrderMismatchError
from ellres.qseries import QSeries, max_abs_diff, qs_inv, qs_mul, rel_diff


def series(*coeffs):
    return QSeries(np.array(coeffs, dtype=complex))


class TestRingOps:
    def test_difference_of_squares(self):
        # (1 + q)(1 - q) at Q=2 -> 1 + 0 q - q^2
        f = series(1, 1, 0)
        g = series(1, -1, 0)
        np.testing.assert_allclose((f * g).coeffs, [1, 0, -1])

    def test_additive_inverse(self):
        f = series(2, -1j, 0.5)
        assert (f + (-f)).max_abs() == 0.0

    def test_one_is_identity(self):
        rng = np.random.default_rng(0)
        for _ in range(10):
            f = QSeries(rng.normal(size=6) + 1j * rng.normal(size=6))
            assert max_abs_diff(QSeries.one(5) * f, f) == 0.0

    def test_mul_truncates_cauchy_product(self):
        f = series(1, 2, 3)
        g = series(4, 5, 6)
        # full product: 4, 13, 28, 27, 18 -> truncated at Q=2
        np.testing.assert_allclose((f * g).coeffs, [4, 13, 28])

    def test_order_mismatch_raises(self):
        with pytest.raises(OrderMismatchError):
            series(1, 0) * series(1, 0, 0)
        with pytest.raises(OrderMismatchError):
            series(1, 0) + series(1, 0, 0)

    def test_scalar_ops(self):
        f = series(1, 2, 3)
        np.testing.assert_allclose((2 * f).coeffs, [2, 4, 6])
        np.testing.assert_allclose((f + 1).coeffs, [2, 2, 3])
        np.testing.assert_allclose((f / 2).coeffs, [0.5, 1, 1.5])

    def test_ring_axioms_random(self):
        rng = np.random.default_rng(42)
        for _ in range(25):
            a, b, c = (
                QSeries(rng.normal(size=9) + 1j * rng.normal(size=9))
                for _ in range(3)
            )
            assert rel_diff(a * (b + c), a * b + a * c) < 1e-14
            assert rel_diff(a * b, b * a) < 1e-14
            assert rel_diff((a * b) * c, a * (b * c)) < 1e-13


class TestInversion:
    def test_geometric_series(self):
        # inv(1 - q) at Q=3 -> 1 + q + q^2 + q^3
        f = series(1, -1, 0, 0)
        np.testing.assert_allclose(qs_inv(f).coeffs, [1, 1, 1, 1])

    def test_constant(self):
        assert qs_inv(QSeries.constant(2.0, 4)).coeff(0) == 0.5

    def test_roundtrip(self):
        rng = np.random.default_rng(7)
        one = QSeries.one(12)
        for _ in range(50):
            coeffs = rng.normal(size=13) + 1j * rng.normal(size=13)
            coeffs[0] = 1.0 + 0.5 * rng.uniform()
            f = QSeries(coeffs)
            assert max_abs_diff(qs_mul(f, qs_inv(f)), one) < 1e-10

    def test_non_unit_rejected_with_magnitude(self):
        f = series(1e-15, 1.0, 2.0)
        with pytest.raises(NonUnitSeriesError) as exc:
            f.inv()
        assert exc.value.magnitude == pytest.approx(1e-15)

    def test_zero_series_rejected(self):
        with pytest.raises(NonUnitSeriesError):
            QSeries.zero(3).inv()

    def test_structural_zero_vs_conditioning(self):
        # tiny constant term relative to the rest is structural
        with pytest.raises(NonUnitSeriesError):
            series(1e-14, 1e3).inv()
        # small but dominant constant term is fine
        g = series(1e-6, 1e-8)
        assert abs((g * g.inv()).coeff(0) - 1) < 1e-12


class TestEvaluation:
    def test_eval_horner(self):
        f = series(1, 2, 3)
        q0 = 0.1 + 0.2j
        assert f.eval_at(q0) == pytest.approx(1 + 2 * q0 + 3 * q0 * q0)

    def test_power(self):
        f = series(1, 1, 0, 0)
        np.testing.assert_allclose((f ** 3).coeffs, [1, 3, 3, 1])
        np.testing.assert_allclose((f ** 0).coeffs, [1, 0, 0, 0])
        inv2 = f ** -2
        np.testing.assert_allclose((inv2 * f * f).coeffs, [1, 0, 0, 0], atol=1e-12)

    def test_immutable(self):
        f = series(1, 2)
        with pytest.raises(ValueError):
            f.coeffs[0] = 5.0
