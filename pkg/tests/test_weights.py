import cmath

import numpy as np
import pytest

from ellres.errors import SamplingError
from ellres.weights import (
    EvalPoint,
    WeightVector,
    eval_weight,
    root_of_unity,
    sample_generic_point,
    with_y_shifts,
)


class TestEvalWeight:
    def test_zero_vector(self):
        p = EvalPoint(y_val=2j, t_vals=(1.5, 0.3 + 1j))
        assert eval_weight(WeightVector(0, 0, (0, 0)), p) == 1.0

    def test_single_coordinate(self):
        p = EvalPoint(y_val=1.0, t_vals=(2.0, 5.0))
        assert eval_weight(WeightVector(0, 0, (1, 0)), p) == 2.0

    def test_mixed_product(self):
        p = EvalPoint(y_val=1j, t_vals=(2.0, 3.0))
        assert eval_weight(WeightVector(1, 0, (1, 1)), p) == pytest.approx(6j)

    def test_missing_s_value(self):
        p = EvalPoint(y_val=1.0, t_vals=(2.0,))
        with pytest.raises(ValueError):
            eval_weight(WeightVector(0, 1, (0,)), p)
        p2 = EvalPoint(y_val=1.0, t_vals=(2.0,), s_val=0.5)
        assert eval_weight(WeightVector(0, 2, (0,)), p2) == pytest.approx(0.25)

    def test_multiplicativity(self):
        rng = np.random.default_rng(0)
        p = EvalPoint(
            y_val=complex(rng.uniform(0.8, 1.2), 0.3),
            t_vals=tuple(
                complex(rng.uniform(0.8, 1.2) * np.exp(2j * np.pi * rng.uniform()))
                for _ in range(3)
            ),
            s_val=0.9 + 0.1j,
        )
        for _ in range(100):
            w1 = WeightVector(
                int(rng.integers(-2, 3)),
                int(rng.integers(-2, 3)),
                tuple(int(x) for x in rng.integers(-3, 4, size=3)),
            )
            w2 = WeightVector(
                int(rng.integers(-2, 3)),
                int(rng.integers(-2, 3)),
                tuple(int(x) for x in rng.integers(-3, 4, size=3)),
            )
            lhs = eval_weight(w1 + w2, p)
            rhs = eval_weight(w1, p) * eval_weight(w2, p)
            assert abs(lhs - rhs) <= 1e-12 * abs(rhs)

    def test_rank_mismatch(self):
        p = EvalPoint(y_val=1.0, t_vals=(2.0,))
        with pytest.raises(ValueError):
            eval_weight(WeightVector(0, 0, (1, 0)), p)


class TestEvalPoint:
    def test_nonzero_entries_enforced(self):
        with pytest.raises(ValueError):
            EvalPoint(y_val=0.0, t_vals=(1.0,))
        with pytest.raises(ValueError):
            EvalPoint(y_val=1.0, t_vals=(0.0,))


class TestRootOfUnity:
    def test_reference_values(self):
        assert root_of_unity(2, 1) == pytest.approx(-1.0)
        assert root_of_unity(4, 2) == pytest.approx(-1.0)
        assert root_of_unity(3, 1) == pytest.approx(complex(-0.5, np.sqrt(3) / 2))

    def test_trivial_root_rejected(self):
        with pytest.raises(ValueError):
            root_of_unity(3, 0)
        with pytest.raises(ValueError):
            root_of_unity(3, 3)
        with pytest.raises(ValueError):
            root_of_unity(1, 1)

    def test_unit_modulus(self):
        for n in range(2, 8):
            for k in range(1, n):
                assert abs(abs(root_of_unity(n, k)) - 1.0) < 1e-15


class TestSampler:
    def test_deterministic(self):
        a = sample_generic_point(123, 3)
        b = sample_generic_point(123, 3)
        assert a == b

    def test_constraint_respected(self):
        w = WeightVector(0, 0, (1, -1))
        p = sample_generic_point(5, 2, constraints=[w], separation=1e-3)
        assert abs(p.t_vals[0] / p.t_vals[1] - 1) >= 1e-3

    def test_rank_one(self):
        p = sample_generic_point(9, 1)
        assert len(p.t_vals) == 1 and p.t_vals[0] != 0

    def test_budget_exhausted(self):
        # an impossible demand: a coordinate at least distance 2 from 1
        # while staying inside the sampling annulus
        w = WeightVector(0, 0, (1,))
        with pytest.raises(SamplingError):
            sample_generic_point(
                0, 1, 0.05, constraints=[w], separation=2.5, max_tries=50
            )

    def test_spread_validated(self):
        with pytest.raises(ValueError):
            sample_generic_point(0, 1, 0.7)

    def test_y_constraints_honored(self):
        w = WeightVector(0, 0, (1, -1))
        constraints = with_y_shifts([w])
        assert len(constraints) == 2
        p = sample_generic_point(
            4, 2, constraints=constraints, y_val=-1.0, separation=0.05
        )
        u = p.t_vals[0] / p.t_vals[1]
        assert abs(u - 1) >= 0.05
        assert abs(-u - 1) >= 0.05


class TestWeightVectorAlgebra:
    def test_add_neg(self):
        a = WeightVector(1, 0, (2, -1))
        b = WeightVector(0, 1, (-2, 1))
        assert (a + b) == WeightVector(1, 1, (0, 0))
        assert (-a) == WeightVector(-1, 0, (-2, 1))
        assert (a - a).is_zero()

    def test_unit(self):
        e1 = WeightVector.unit(1, 3)
        assert e1.t_exps == (0, 1, 0)
        assert cmath.isclose(
            eval_weight(e1, EvalPoint(y_val=1.0, t_vals=(2.0, 3.0, 4.0))), 3.0
        )
