import numpy as np
import pytest

from ellres import parity
from ellres.errors import UsageError


class TestExtQuiver:
    def test_zero_flag_gives_zero(self):
        v1 = parity.FullFlag((0, 1, 2))
        v2 = parity.FullFlag((0, 0, 0))
        assert parity.ext_quiver(v1, v2) == 0

    def test_dimension_two_split(self):
        # d = 2, subset {1}: ext(V1, V2) - ext(V2, V1) = +1
        f1, f2 = parity.split_flags((1,), 1, 1)
        assert parity.ext_quiver(f1, f2) - parity.ext_quiver(f2, f1) == 1
        g1, g2 = parity.split_flags((2,), 1, 1)
        assert parity.ext_quiver(g1, g2) - parity.ext_quiver(g2, g1) == -1

    def test_doubled_step_removal(self):
        rng = np.random.default_rng(0)
        for _ in range(30):
            d1, d2 = int(rng.integers(1, 4)), int(rng.integers(1, 4))
            d = d1 + d2
            subset = tuple(sorted(rng.choice(range(1, d + 1), size=d1, replace=False)))
            f1, f2 = parity.split_flags(subset, d1, d2)
            pos = int(rng.integers(1, len(f1.dims)))
            p1 = parity.FullFlag(f1.dims[:pos] + (f1.dims[pos - 1],) + f1.dims[pos:])
            p2 = parity.FullFlag(f2.dims[:pos] + (f2.dims[pos - 1],) + f2.dims[pos:])
            assert parity.ext_quiver(p1, p2) == parity.ext_quiver(f1, f2)
            assert parity.ext_quiver(p2, p1) == parity.ext_quiver(f2, f1)

    def test_length_mismatch(self):
        with pytest.raises(UsageError):
            parity.ext_quiver(parity.FullFlag((0, 1)), parity.FullFlag((0, 0, 1)))


class TestFullFlag:
    def test_step_validation(self):
        with pytest.raises(ValueError):
            parity.FullFlag((0, 2))
        with pytest.raises(ValueError):
            parity.FullFlag((1, 2))
        with pytest.raises(ValueError):
            parity.FullFlag((0, 1, 0))

    def test_from_jump_set(self):
        f = parity.FullFlag.from_jump_set({1, 3}, 4)
        assert f.dims == (0, 1, 1, 2)


class TestSplittingDiffSet:
    def test_one_one(self):
        assert parity.splitting_diff_set(1, 1) == {-1, 1}

    def test_zero_d(self):
        assert parity.splitting_diff_set(0, 4) == {0}
        assert parity.splitting_diff_set(3, 0) == {0}

    def test_two_two(self):
        assert parity.splitting_diff_set(2, 2) == {-4, -2, 0, 2, 4}

    def test_progression_small(self):
        for d1 in range(0, 5):
            for d2 in range(0, 5):
                want = set(range(-d1 * d2, d1 * d2 + 1, 2))
                assert parity.splitting_diff_set(d1, d2) == want

    def test_swap_negates(self):
        for d1, d2 in ((1, 2), (2, 3), (3, 1)):
            lhs = parity.splitting_diff_set(d1, d2)
            rhs = {-v for v in parity.splitting_diff_set(d2, d1)}
            assert lhs == rhs

    def test_budget(self):
        with pytest.raises(UsageError):
            parity.splitting_diff_set(9, 8)
        with pytest.raises(UsageError):
            parity.splitting_diff_set(-1, 2)


class TestHrrParity:
    def test_trivial_canonical(self):
        s = parity.SurfaceClass(rank=1, c1_dot_K=0, K_squared=0)
        assert parity.hrr_parity_diff(s, 3) == 0

    def test_spin_mode_even(self):
        rng = np.random.default_rng(1)
        for _ in range(200):
            s = parity.SurfaceClass.spin_surface(
                rank=1,
                c1_dot_D=int(rng.integers(-20, 21)),
                D_squared=int(rng.integers(-15, 16)),
            )
            assert parity.hrr_parity_diff(s, int(rng.integers(-3, 5))) % 2 == 0

    def test_line_bundle_arithmetic(self):
        s = parity.SurfaceClass(rank=1, c1_dot_K=3, K_squared=11)
        assert parity.hrr_parity_diff(s, 1) == -3

    def test_non_integral_rejected(self):
        s = parity.SurfaceClass(rank=1, c1_dot_K=0, K_squared=3)
        with pytest.raises(UsageError):
            parity.hrr_parity_diff(s, 2)  # (1 - 2) * 3 odd

    def test_spin_fields_derived(self):
        s = parity.SurfaceClass.spin_surface(rank=1, c1_dot_D=3, D_squared=-2)
        assert s.c1_dot_K == 6 and s.K_squared == -8


class TestVwExtParity:
    def test_equal_inputs(self):
        s = parity.SurfaceClass.spin_surface(rank=1, c1_dot_D=4, D_squared=-2)
        f = parity.BundleData(2, 5)
        assert parity.vw_ext_parity(s, f, f) == 0

    def test_random_spin_draws(self):
        rng = np.random.default_rng(2)
        for _ in range(100):
            s = parity.SurfaceClass.spin_surface(
                rank=1,
                c1_dot_D=int(rng.integers(-10, 11)),
                D_squared=int(rng.integers(-10, 11)),
            )
            f1 = parity.BundleData(int(rng.integers(1, 5)), int(rng.integers(-10, 11)))
            f2 = parity.BundleData(int(rng.integers(1, 5)), int(rng.integers(-10, 11)))
            assert parity.vw_ext_parity(s, f1, f2) == 0

    def test_non_spin_rejected(self):
        s = parity.SurfaceClass(rank=1, c1_dot_K=3, K_squared=4)
        with pytest.raises(UsageError):
            parity.vw_ext_parity(s, parity.BundleData(1, 1), parity.BundleData(1, 2))

    def test_doubled_dimensions_all_even(self):
        for d1 in range(0, 4):
            for d2 in range(0, 4):
                values = parity.splitting_diff_set(2 * d1, 2 * d2)
                assert all(v % 2 == 0 for v in values)
