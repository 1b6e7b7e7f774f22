"""Command-line front end.

Three subcommands:

* ``genus``   - elliptic genus of a fixed-point model file at a chosen y;
* ``residue`` - the twisted contour integral of a root configuration by one
  or all of the three routes;
* ``verify``  - run a named verification suite and emit a report.

Exit codes: 0 all PASS, 1 a case FAILed, 2 usage or parse error.  The y
argument grammar is ``<re>+<im>i``, ``zeta:N:k`` or ``random`` (seeded).
``ELLRES_THREADS`` caps suite parallelism.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

import numpy as np

from . import geom, residue, suites
from .errors import EllresError, UsageError
from .qseries import QSeries
from .weights import root_of_unity, sample_generic_point


def parse_y(text: str, seed: int = 0) -> complex:
    """Parse the --y grammar: complex literal, zeta:N:k, or random."""
    text = text.strip()
    if text == "random":
        rng = np.random.default_rng(seed ^ 0x5EED)
        return complex(
            rng.uniform(0.75, 1.3) * np.exp(2j * np.pi * rng.uniform())
        )
    if text.startswith("zeta:"):
        parts = text.split(":")
        if len(parts) != 3:
            raise UsageError(f"bad root-of-unity spec {text!r}; use zeta:N:k")
        try:
            return root_of_unity(int(parts[1]), int(parts[2]))
        except ValueError as exc:
            raise UsageError(f"bad root-of-unity spec {text!r}: {exc}") from exc
    # complex literal with i or j, or a bare real
    literal = re.sub(r"i\b", "j", text.replace(" ", ""))
    try:
        value = complex(literal)
    except ValueError as exc:
        raise UsageError(f"cannot parse y value {text!r}") from exc
    if value == 0:
        raise UsageError("y must be nonzero")
    return value


def _print_series(series: QSeries, scale: float, as_json: bool, extra: dict | None = None):
    if as_json:
        payload = {
            "order": series.order,
            "coeffs": [[c.real, c.imag] for c in series.coeffs],
            "scale": scale,
        }
        payload.update(extra or {})
        print(json.dumps(payload, sort_keys=True))
        return
    for k, c in enumerate(series.coeffs):
        print(f"q^{k}: {c.real:+.15e} {c.imag:+.15e}i")
    print(f"scale: {scale:.15e}")


def _load_config(path: str) -> geom.ChernRootConfig:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except FileNotFoundError as exc:
        raise UsageError(str(exc)) from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}:{exc.lineno}: invalid JSON ({exc.msg})") from exc

    def roots(key):
        out = []
        for i, entry in enumerate(data.get(key, [])):
            try:
                out.append(
                    (
                        complex(float(entry["re"]), float(entry.get("im", 0.0))),
                        int(entry.get("sign", 1)),
                    )
                )
            except (KeyError, TypeError, ValueError) as exc:
                raise UsageError(f"{path}: {key}[{i}] malformed: {exc}") from exc
        return tuple(out)

    try:
        return geom.ChernRootConfig(roots("a_roots"), roots("b_roots"))
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def cmd_genus(args) -> int:
    model = geom.load_model(args.model)
    y = parse_y(args.y, args.seed)
    point = sample_generic_point(
        args.seed,
        model.lattice_rank,
        constraints=geom.genus_constraints(model),
        y_val=y,
        separation=0.02,
    )
    result = geom.elliptic_genus(model, point, args.q_order)
    _print_series(
        result.series,
        result.scale,
        args.json,
        extra={
            "y": [y.real, y.imag],
            "t_vals": [[t.real, t.imag] for t in point.t_vals],
            "seed": args.seed,
        },
    )
    return 0


def cmd_residue(args) -> int:
    cfg = _load_config(args.config)
    y = parse_y(args.y, args.seed)
    spec = residue.IntegrandSpec(args.n, cfg, y)
    order = args.q_order

    def compute(method: str):
        if method == "direct":
            r = residue.cn_direct(spec, order)
            return r.series, r.scale
        if method == "quadrature":
            r = residue.quadrature_residue(spec, order, args.points)
            return residue.SIGMA_RES * r.series, r.scale
        if method == "localization":
            g = geom.euler_char_PV(
                spec.n, residue.virtual_normalize(cfg, y), y, order
            )
            return residue.SIGMA_JK * g.series, g.scale
        raise UsageError(f"unknown method {method!r}")

    if args.all_methods:
        results = {m: compute(m) for m in ("direct", "quadrature", "localization")}
        # identically-vanishing integrals agree as numerical zeros; floor the
        # deviation denominator by the conditioning scale
        floor = 1e-5 * max(scale for _, scale in results.values())
        dev = 0.0
        names = list(results)
        for i in range(len(names)):
            for j in range(i + 1, len(names)):
                a, b = results[names[i]][0], results[names[j]][0]
                mag = max(a.max_abs(), b.max_abs(), floor)
                dev = max(dev, float(np.max(np.abs(a.coeffs - b.coeffs))) / mag)
        if args.json:
            print(
                json.dumps(
                    {
                        m: [[c.real, c.imag] for c in series.coeffs]
                        for m, (series, _) in results.items()
                    }
                    | {"max_pairwise_deviation": dev},
                    sort_keys=True,
                )
            )
        else:
            for m, (series, scale) in results.items():
                print(f"# {m} (normalized to the residue-map value)")
                _print_series(series, scale, False)
            print(f"max pairwise deviation: {dev:.3e}")
        return 0
    series, scale = compute(args.method)
    _print_series(series, scale, args.json)
    return 0


_SUITE_ARGS = {
    "theta": ("trials", "q_order", "tol"),
    "axioms": ("trials", "q_order", "points", "tol"),
    "blowup": ("N", "trials", "q_order"),
    "pn-vanishing": ("N", "trials", "q_order"),
    "c0-vanishing": ("rp", "rm", "N", "k", "trials", "q_order", "expect_fail"),
    "jk-agreement": ("count", "q_order", "tol", "points"),
    "flip": ("trials", "q_order", "tol"),
    "ellipticity": ("count", "q_order", "tol"),
    "holomorphy": ("paths", "q_order"),
    "flags": ("dmax",),
    "hrr": ("draws",),
    "vw-parity": ("draws",),
}


def cmd_verify(args) -> int:
    name = args.suite
    if name not in suites.SUITES:
        raise UsageError(
            f"unknown suite {name!r}; choose from {', '.join(sorted(suites.SUITES))}"
        )
    kwargs = {"seed": args.seed}
    allowed = _SUITE_ARGS[name]
    if "trials" in allowed and args.trials is not None:
        kwargs["trials"] = args.trials
    if "q_order" in allowed and args.q_order is not None:
        kwargs["q_order"] = args.q_order
    if "tol" in allowed and args.tol is not None:
        kwargs["route_tol" if name == "flip" else "tol"] = args.tol
    if "points" in allowed and args.points is not None:
        kwargs["n_points"] = args.points
    if "count" in allowed and args.count is not None:
        kwargs["count"] = args.count
    if "draws" in allowed and args.draws is not None:
        kwargs["draws"] = args.draws
    if "dmax" in allowed and args.dmax is not None:
        kwargs["dmax"] = args.dmax
    if "paths" in allowed and args.paths is not None:
        kwargs["paths"] = args.paths
    if name in ("blowup", "pn-vanishing") and args.N is not None:
        kwargs["n_values"] = (args.N,)
    if name == "c0-vanishing":
        if args.rp is not None or args.rm is not None or args.N is not None:
            kwargs.update(
                {
                    "r_plus": args.rp,
                    "r_minus": args.rm,
                    "n_root": args.N,
                    "k_root": args.k,
                }
            )
        kwargs["expect_fail"] = args.expect_fail

    report = suites.SUITES[name](**kwargs)
    if args.json:
        print(report.to_json(volatile=not args.stable_json))
    else:
        print("\n".join(report.summary_lines()))
        print(f"constants: {report.constants}")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ellres",
        description="Elliptic genera from fixed-point data and residue "
        "wall-crossing verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_genus = sub.add_parser("genus", help="elliptic genus of a model file")
    p_genus.add_argument("--model", required=True, help="model JSON file")
    p_genus.add_argument("--y", required=True, help="y value (--y=-1, zeta:N:k, random)")
    p_genus.add_argument("--q-order", type=int, default=8, dest="q_order")
    p_genus.add_argument("--seed", type=int, default=0)
    p_genus.add_argument("--json", action="store_true")
    p_genus.set_defaults(func=cmd_genus)

    p_res = sub.add_parser("residue", help="contour integral of a configuration")
    p_res.add_argument("--config", required=True, help="root configuration JSON file")
    p_res.add_argument("--n", type=int, default=0)
    p_res.add_argument(
        "--method",
        choices=("direct", "quadrature", "localization"),
        default="direct",
    )
    p_res.add_argument("--all-methods", action="store_true", dest="all_methods")
    p_res.add_argument("--y", required=True)
    p_res.add_argument("--q-order", type=int, default=8, dest="q_order")
    p_res.add_argument("--points", type=int, default=residue.DEFAULT_QUAD_POINTS)
    p_res.add_argument("--seed", type=int, default=0)
    p_res.add_argument("--json", action="store_true")
    p_res.set_defaults(func=cmd_residue)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("suite", help=", ".join(sorted(suites.SUITES)))
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--trials", type=int, default=None)
    p_ver.add_argument("--tol", type=float, default=None)
    p_ver.add_argument("--q-order", type=int, default=None, dest="q_order")
    p_ver.add_argument("--points", type=int, default=None)
    p_ver.add_argument("--count", type=int, default=None)
    p_ver.add_argument("--draws", type=int, default=None)
    p_ver.add_argument("--dmax", type=int, default=None)
    p_ver.add_argument("--paths", type=int, default=None)
    p_ver.add_argument("--N", type=int, default=None)
    p_ver.add_argument("--k", type=int, default=None)
    p_ver.add_argument("--rp", type=int, default=None)
    p_ver.add_argument("--rm", type=int, default=None)
    p_ver.add_argument("--expect-fail", action="store_true", dest="expect_fail")
    p_ver.add_argument("--json", action="store_true")
    p_ver.add_argument(
        "--stable-json",
        action="store_true",
        help="omit timestamp/timing so identical runs emit identical bytes",
    )
    p_ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EllresError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
