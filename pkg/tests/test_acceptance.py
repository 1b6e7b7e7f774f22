"""Acceptance gate: one test per criterion, at the stated tolerances.

Each test prints a single PASS/FAIL line (run pytest with -s or check the
captured output).  Criteria and tolerances are pinned here, not configurable.
"""

import numpy as np
import pytest

from ellres import geom, parity, residue, suites
from ellres.qseries import rel_diff
from ellres.theta import theta_series
from ellres.weights import WeightVector, root_of_unity, sample_generic_point


def _report(num: int, name: str, passed: bool, detail: str = ""):
    status = "PASS" if passed else "FAIL"
    print(f"ACCEPTANCE {num:2d} [{status}] {name}" + (f" ({detail})" if detail else ""))
    assert passed, f"criterion {num} failed: {name} {detail}"


def test_criterion_01_theta_q_difference():
    # theta(q0 z) = -(q0 z)^{-1} theta(z) for 100 random z, |q0| = 0.2, Q = 20
    rng = np.random.default_rng(101)
    q0 = 0.2
    worst = 0.0
    count = 0
    while count < 100:
        z = complex(rng.uniform(0.5, 2.0) * np.exp(2j * np.pi * rng.uniform()))
        if abs(z - 1) < 0.05 or abs(q0 * z - 1) < 0.05:
            continue
        count += 1
        lhs = theta_series(q0 * z, 20).eval_at(q0)
        rhs = -1.0 / (q0 * z) * theta_series(z, 20).eval_at(q0)
        worst = max(worst, abs(lhs - rhs) / abs(rhs))
    _report(1, "theta q-difference", worst <= 1e-8, f"max rel {worst:.2e}")


def test_criterion_02_residue_axioms():
    rep = suites.run_axioms(seed=202, trials=20, n_points=512, tol=1e-8)
    by_name = {c.name: c for c in rep.cases}
    ok = (
        by_name["laurent-to-zero"].passed
        and by_name["laurent-to-zero"].max_error <= 1e-9
        and by_name["unit-pole-to-one"].passed
        and by_name["unit-pole-to-one"].max_error <= 1e-8
    )
    _report(2, "residue axioms", ok, f"s^k max {by_name['laurent-to-zero'].max_error:.1e}")


def test_criterion_03_route_agreement():
    rep = suites.run_jk_agreement(count=50, seed=303, q_order=8, tol=1e-6)
    worst = max(c.max_error for c in rep.cases)
    _report(3, "three-route agreement on 50 configs", rep.passed, f"max rel {worst:.2e}")


def test_criterion_04_main_vanishing():
    rep = suites.run_c0_vanishing(
        rank_budget=6, n_values=(2, 3, 4, 5, 6), trials=20, seed=404, q_order=16
    )
    positives = [c for c in rep.cases if not c.name.endswith("-negative")]
    negatives = [c for c in rep.cases if c.name.endswith("-negative")]
    ok = rep.passed and len(positives) > 50 and len(negatives) >= 5
    worst = max(c.max_error for c in positives)
    _report(
        4,
        "rank-condition vanishing + negative controls",
        ok,
        f"{len(positives)} cases, max ratio {worst:.2e}",
    )


def test_criterion_05_pn_vanishing_and_blowup():
    rep_pn = suites.run_pn_vanishing(
        n_values=(2, 3, 4, 5, 6), trials=20, seed=505, q_order=8
    )
    rep_bl = suites.run_blowup(n_values=(2, 3, 4), trials=20, seed=505, q_order=8)
    ok = rep_pn.passed and rep_bl.passed
    _report(
        5,
        "projective-space vanishing and blow-up invariance",
        ok,
        f"{len(rep_pn.cases)}+{len(rep_bl.cases)} cases",
    )


def test_criterion_06_q0_closed_form():
    rng = np.random.default_rng(606)
    worst = 0.0
    for n in range(0, 7):
        model = geom.projective_space_model(n)
        cons = geom.genus_constraints(model)
        draws = 0
        while draws < 20:
            y = complex(rng.uniform(0.6, 1.6) * np.exp(2j * np.pi * rng.uniform()))
            if abs(y - 1.0) < 0.1:
                continue
            draws += 1
            point = sample_generic_point(
                1000 * n + draws, n + 1, constraints=cons, y_val=y, separation=0.03
            )
            got = geom.elliptic_genus(model, point, 0).series.coeff(0)
            want = (1 - y ** (n + 1)) / (1 - y)
            worst = max(worst, abs(got - want))
    _report(6, "q^0 coefficient of P^n", worst <= 1e-10, f"max abs {worst:.2e}")


def test_criterion_07_flip_flop():
    # flop: equal dims, 20 generic y values
    rng = np.random.default_rng(707)
    plus = [WeightVector.unit(i, 4) for i in (0, 1)]
    minus = [WeightVector.unit(i, 4) for i in (2, 3)]
    worst = 0.0
    for t in range(20):
        y = complex(rng.uniform(0.7, 1.4) * np.exp(2j * np.pi * rng.uniform()))
        if abs(y - 1) < 0.08:
            continue
        rep = residue.flip_check(plus, minus, y_val=y, trials=1, seed=t, order=8)
        worst = max(worst, rep.max_ratio)
        assert rep.passed
    # unequal dims, difference 0 mod 2: vanishes at zeta_2 only
    plus31 = [WeightVector.unit(i, 4) for i in range(3)]
    minus31 = [WeightVector.unit(3, 4)]
    at_root = residue.flip_check(plus31, minus31, 2, 1, trials=5, seed=7, order=8)
    generic = residue.flip_check(
        plus31, minus31, y_val=0.9 + 0.31j, trials=5, seed=8, order=8
    )
    ok = worst <= 1e-7 and at_root.passed and generic.passed
    _report(7, "flop identity and flip vanishing", ok, f"flop max {worst:.2e}")


def test_criterion_08_integrand_ellipticity():
    rep = suites.run_ellipticity(count=20, seed=808, q_order=20, tol=1e-8)
    case = next(c for c in rep.cases if c.name == "integrand-quasi-periodicity")
    _report(8, "integrand quasi-periodicity", case.passed, f"max rel {case.max_error:.2e}")


def test_criterion_09_virtual_reduction():
    rng = np.random.default_rng(909)
    checked = 0
    worst_eq = 0.0
    for n_root in (2, 3):
        y = root_of_unity(n_root, 1)
        for _ in range(5):
            # virtual ranks (2 - 1) - 1 = 0: divisible by every N
            cfg = residue.sample_config(
                rng, 3, 1, y, signs_plus=(1, 1, -1), signs_minus=(1,)
            )
            out = residue.virtual_normalize(cfg, y)
            s_old = residue.IntegrandSpec(0, cfg, y)
            s_new = residue.IntegrandSpec(0, out, y)
            for k in range(5):
                s = complex(np.exp(2j * np.pi * (k + 0.37) / 5))
                worst_eq = max(
                    worst_eq,
                    rel_diff(
                        residue.integrand_at(s_old, s, 8),
                        residue.integrand_at(s_new, s, 8),
                    ),
                )
            res = residue.cn_direct(residue.IntegrandSpec(0, cfg, y), 8)
            if res.series.max_abs() <= 1e-7 * res.scale:
                checked += 1
    ok = checked == 10 and worst_eq <= 1e-8
    _report(9, "virtual reduction", ok, f"integrand eq {worst_eq:.2e}")


def test_criterion_10_flag_lemma():
    ok = True
    for d1 in range(0, 13):
        for d2 in range(0, 13 - d1):
            got = parity.splitting_diff_set(d1, d2)
            want = set(range(-d1 * d2, d1 * d2 + 1, 2))
            ok = ok and got == want
    _report(10, "flag splitting progression (d1 + d2 <= 12)", ok)


def test_criterion_11_hrr_vw_parity():
    rng = np.random.default_rng(1111)
    ok = True
    for _ in range(1000):
        s = parity.SurfaceClass.spin_surface(
            rank=1,
            c1_dot_D=int(rng.integers(-30, 31)),
            D_squared=int(rng.integers(-20, 21)),
        )
        ok = ok and parity.hrr_parity_diff(s, int(rng.integers(-4, 6))) % 2 == 0
    for _ in range(200):
        s = parity.SurfaceClass(rank=1, c1_dot_K=0, K_squared=0)
        ok = ok and parity.hrr_parity_diff(s, int(rng.integers(-4, 6))) == 0
    for _ in range(100):
        s = parity.SurfaceClass.spin_surface(
            rank=1, c1_dot_D=int(rng.integers(-10, 11)), D_squared=int(rng.integers(-10, 11))
        )
        f1 = parity.BundleData(int(rng.integers(1, 5)), int(rng.integers(-10, 11)))
        f2 = parity.BundleData(int(rng.integers(1, 5)), int(rng.integers(-10, 11)))
        ok = ok and parity.vw_ext_parity(s, f1, f2) == 0
    _report(11, "surface Riemann-Roch and local-surface parity", ok)


def test_criterion_12_holomorphy_probe():
    rep = suites.run_holomorphy(seed=1212, q_order=8, paths=5)
    worst = max(c.max_error for c in rep.cases)
    _report(
        12,
        "boundedness along root collisions (5 paths)",
        rep.passed,
        f"max growth exponent {worst:.3f}",
    )
