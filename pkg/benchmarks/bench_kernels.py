#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-numpy fallback.

Times the raw series primitives by importing both kernel modules directly,
then times an end-to-end residue workload in a subprocess per backend
(backend selection happens at import time via ELLRES_BACKEND).

Usage: python benchmarks/bench_kernels.py [--orders 8 16 32] [--reps 2000]
"""

import argparse
import importlib
import os
import subprocess
import sys
import time

import numpy as np


def time_fn(fn, reps):
    t0 = time.perf_counter()
    for _ in range(reps):
        fn()
    return (time.perf_counter() - t0) / reps


def bench_primitives(orders, reps):
    from ellres import _kernels_py

    backends = {"python": _kernels_py}
    try:
        backends["compiled"] = importlib.import_module("ellres._kernels")
    except ImportError:
        print("compiled extension not built; benchmarking the fallback only")

    rng = np.random.default_rng(0)
    rows = []
    for order in orders:
        a = rng.normal(size=order + 1) + 1j * rng.normal(size=order + 1)
        b = rng.normal(size=order + 1) + 1j * rng.normal(size=order + 1)
        a[0] = 1.5
        z = 0.9 + 0.4j
        for name, mod in backends.items():
            rows.append(
                (
                    order,
                    name,
                    1e6 * time_fn(lambda: mod.mul(a, b), reps),
                    1e6 * time_fn(lambda: mod.inv(a), reps),
                    1e6 * time_fn(lambda: mod.phi(z, order), reps),
                )
            )
    print(f"{'Q':>4} {'backend':>9} {'mul us':>9} {'inv us':>9} {'phi us':>9}")
    for order, name, mul_us, inv_us, phi_us in rows:
        print(f"{order:>4} {name:>9} {mul_us:>9.2f} {inv_us:>9.2f} {phi_us:>9.2f}")
    if len(backends) == 2:
        print()
        for order in orders:
            sub = [r for r in rows if r[0] == order]
            py = next(r for r in sub if r[1] == "python")
            cc = next(r for r in sub if r[1] == "compiled")
            speedup = sum(py[2:]) / sum(cc[2:])
            print(f"Q={order}: compiled speedup ~{speedup:.1f}x on primitives")


WORKLOAD = r"""
import time
import numpy as np
import ellres
from ellres import residue

rng = np.random.default_rng(1)
specs = []
for _ in range(30):
    y = complex(rng.uniform(0.8, 1.2) * np.exp(2j * np.pi * rng.uniform()))
    cfg = residue.sample_config(rng, 2, 1, y)
    specs.append(residue.IntegrandSpec(int(rng.integers(0, 3)), cfg, y))
t0 = time.perf_counter()
for spec in specs:
    residue.cn_direct(spec, 16)
direct_s = time.perf_counter() - t0
t0 = time.perf_counter()
for spec in specs[:10]:
    residue.quadrature_residue(spec, 8, 512)
quad_s = time.perf_counter() - t0
print(f"{ellres.KERNEL_BACKEND}: 30x cn_direct(Q=16) {direct_s:.3f}s, "
      f"10x quadrature(Q=8, 512 nodes) {quad_s:.3f}s")
"""


def bench_workload():
    print("\nend-to-end residue workload per backend:")
    for backend in ("compiled", "python"):
        env = dict(os.environ, ELLRES_BACKEND=backend)
        proc = subprocess.run(
            [sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True
        )
        if proc.returncode:
            print(f"{backend}: unavailable ({proc.stderr.strip().splitlines()[-1]})")
        else:
            print(proc.stdout.strip())


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--orders", type=int, nargs="+", default=[8, 16, 32])
    parser.add_argument("--reps", type=int, default=2000)
    args = parser.parse_args()
    bench_primitives(args.orders, args.reps)
    bench_workload()
