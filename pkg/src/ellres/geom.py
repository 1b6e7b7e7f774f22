"""Fixed-point presentations of varieties and their localization evaluators.

A variety enters this package purely as a ``FixedPointModel``: a lattice
rank plus a finite list of fixed points, each carrying its tangent weights.
The elliptic genus of such a model is DEFINED as the localization sum

    E(model) = sum_p  y^{#weights(p)} * prod_{w in T_p} theta(y w) / theta(w)

evaluated at a generic torus point.  The per-point factor y^{#weights}
normalizes the q^0 coefficient to the classical chi_{-y} genus (so that
E(P^n) starts at (1 - y^{n+1})/(1 - y)); it is a uniform unit for the
pure-dimensional models built here and does not affect any vanishing or
comparison statement.  Non-compact total spaces are covered by the same
definition, which is the point of using fixed-point data instead of global
geometry.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence, Tuple

import numpy as np

from .errors import EllresError, IllConditionedError, NonUnitSeriesError, UsageError
from .qseries import QSeries
from .theta import phi_series, theta_ratio, theta_series
from .weights import EvalPoint, WeightVector, eval_weight, with_y_shifts

TangentWeights = Tuple[WeightVector, ...]


@dataclass(frozen=True)
class FixedPointModel:
    lattice_rank: int
    points: Tuple[TangentWeights, ...]

    def __post_init__(self):
        for i, weights in enumerate(self.points):
            for w in weights:
                if w.rank != self.lattice_rank:
                    raise ValueError(
                        f"point {i}: weight rank {w.rank} != lattice rank "
                        f"{self.lattice_rank}"
                    )
                if w.is_zero():
                    raise ValueError(f"point {i} carries a zero tangent weight")

    @property
    def num_points(self) -> int:
        return len(self.points)

    def all_weights(self) -> list[WeightVector]:
        return [w for pt in self.points for w in pt]


@dataclass(frozen=True)
class GenusResult:
    series: QSeries
    scale: float


def genus_constraints(model: FixedPointModel) -> list[WeightVector]:
    """Sampler constraints keeping every theta denominator well-conditioned."""
    return with_y_shifts(model.all_weights())


#: Absolute floor on |1 - 1/u| for genus denominators.  The inversion floor
#: of QSeries is relative and cannot flag a theta whose coefficients are
#: uniformly small, so localization applies this point-level guard instead.
GENUS_CONDITION_FLOOR = 1e-9


def elliptic_genus(model: FixedPointModel, p: EvalPoint, order: int) -> GenusResult:
    """Localization sum for the elliptic genus, with its conditioning scale.

    ``scale`` is the largest coefficient magnitude among the individual
    fixed-point terms; vanishing statements are judged relative to it.
    """
    total = QSeries.zero(order)
    scale = 0.0
    y = p.y_val
    for i, weights in enumerate(model.points):
        term = QSeries.constant(y ** len(weights), order)
        for w in weights:
            u = eval_weight(w, p)
            if abs(1.0 - 1.0 / u) < GENUS_CONDITION_FLOOR:
                raise IllConditionedError(
                    f"fixed point {i}: denominator theta({u:.6g}) at weight "
                    f"{w} is too close to its zero"
                )
            try:
                term = term * theta_ratio(y, u, order)
            except NonUnitSeriesError as exc:
                raise IllConditionedError(
                    f"fixed point {i}: theta({u:.6g}) at weight {w} is too "
                    f"close to its zero (|const| = {exc.magnitude:.3e})"
                ) from exc
        scale = max(scale, term.max_abs())
        total = total + term
    return GenusResult(series=total, scale=scale)


# -- model builders ----------------------------------------------------------


def projective_space_model(n: int) -> FixedPointModel:
    """P^n with the standard (C*)^{n+1} action: points i, weights e_j - e_i."""
    if n < 0:
        raise ValueError("n must be >= 0")
    rank = n + 1
    units = [WeightVector.unit(i, rank) for i in range(rank)]
    points = tuple(
        tuple(units[j] - units[i] for j in range(rank) if j != i) for i in range(rank)
    )
    return FixedPointModel(lattice_rank=rank, points=points)


def blowup_local_models(n: int) -> Tuple[FixedPointModel, FixedPointModel]:
    """Local models of a smooth point and of the blown-up point, dim = n + 1.

    Left: one fixed point with weights x_1 .. x_{n+1} (x_i = e_i).  Right:
    the exceptional-locus chart with n + 1 fixed points; point i keeps x_i
    and acquires the projectivized weights x_j - x_i.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rank = n + 1
    x = [WeightVector.unit(i, rank) for i in range(rank)]
    left = FixedPointModel(lattice_rank=rank, points=(tuple(x),))
    right_points = []
    for i in range(rank):
        weights = [x[i]] + [x[j] - x[i] for j in range(rank) if j != i]
        right_points.append(tuple(weights))
    right = FixedPointModel(lattice_rank=rank, points=tuple(right_points))
    return left, right


def product_model(m1: FixedPointModel, m2: FixedPointModel) -> FixedPointModel:
    """Cartesian product: lattices side by side, tangent weights concatenated."""
    r1, r2 = m1.lattice_rank, m2.lattice_rank

    def embed_left(w: WeightVector) -> WeightVector:
        return WeightVector(w.y_exp, w.s_exp, w.t_exps + (0,) * r2)

    def embed_right(w: WeightVector) -> WeightVector:
        return WeightVector(w.y_exp, w.s_exp, (0,) * r1 + w.t_exps)

    points = tuple(
        tuple(embed_left(w) for w in p1) + tuple(embed_right(w) for w in p2)
        for p1 in m1.points
        for p2 in m2.points
    )
    return FixedPointModel(lattice_rank=r1 + r2, points=points)


def total_space_model(
    plus_weights: Sequence[WeightVector],
    minus_weights: Sequence[WeightVector],
    side: str = "+",
) -> FixedPointModel:
    """Total space of O(-1) tensor (dual fiber factor) over a projectivization.

    For side '+': one fixed point per plus weight c_k, with base tangent
    weights {c_m - c_k : m != k} and fiber weights {c_k - c_l : l in minus}.
    The tautological convention is O(-1)|_k = c_k.  Side '-' swaps the two
    roles.  The genus of the (generally non-compact) result is defined by
    the localization sum.
    """
    if side not in ("+", "-"):
        raise ValueError("side must be '+' or '-'")
    base, fiber = (plus_weights, minus_weights) if side == "+" else (
        minus_weights,
        plus_weights,
    )
    base = tuple(base)
    fiber = tuple(fiber)
    if not base:
        raise ValueError("projectivized side must be nonempty")
    rank = base[0].rank
    points = []
    for k, ck in enumerate(base):
        weights = [cm - ck for m, cm in enumerate(base) if m != k]
        weights += [ck - cl for cl in fiber]
        points.append(tuple(weights))
    return FixedPointModel(lattice_rank=rank, points=tuple(points))


# -- Chern-root configurations and the projective-space route ----------------


@dataclass(frozen=True)
class ChernRootConfig:
    """Chern-root data (a_i; b_j) with optional virtual signs.

    Roots must be nonzero, pairwise distinct (simple poles downstream) and
    of modulus > 1, matching the convergence regime of the localization
    route.
    """

    a_roots: Tuple[Tuple[complex, int], ...] = field(default_factory=tuple)
    b_roots: Tuple[Tuple[complex, int], ...] = field(default_factory=tuple)

    def __post_init__(self):
        values = [v for v, _ in self.a_roots] + [v for v, _ in self.b_roots]
        for v, s in tuple(self.a_roots) + tuple(self.b_roots):
            if v == 0:
                raise ValueError("roots must be nonzero")
            if abs(v) <= 1.0:
                raise ValueError(f"root {v!r} must have modulus > 1")
            if s not in (1, -1):
                raise ValueError(f"sign must be +1 or -1, got {s!r}")
        for i in range(len(values)):
            for j in range(i + 1, len(values)):
                if values[i] == values[j]:
                    raise ValueError(f"coincident roots at value {values[i]!r}")

    @classmethod
    def plain(
        cls, a_values: Sequence[complex], b_values: Sequence[complex] = ()
    ) -> "ChernRootConfig":
        return cls(
            tuple((complex(v), 1) for v in a_values),
            tuple((complex(v), 1) for v in b_values),
        )

    @property
    def is_genuine(self) -> bool:
        return all(s > 0 for _, s in self.a_roots + self.b_roots)

    @property
    def rank_plus(self) -> int:
        return sum(s for _, s in self.a_roots)

    @property
    def rank_minus(self) -> int:
        return sum(s for _, s in self.b_roots)

    def pole_values(self) -> list[complex]:
        return [1.0 / v for v, _ in self.a_roots + self.b_roots]


def euler_char_PV(
    n: int, cfg: ChernRootConfig, p: "EvalPoint | complex", order: int
) -> GenusResult:
    """Equivariant Euler characteristic on P(V) by fixed-point localization.

    V = V_+ + V_- with torus weights given by the root values; the integrand
    is O(n) twisted by the theta/Pochhammer package of O(1) x V.  At the
    coordinate point with root c_k the contribution is

        c_k^{-n} prod_i theta(y a_i / c_k) prod_j theta(b_j / (y c_k))
        / [ prod_m phi(c_m / c_k) phi(c_k / c_m) * prod_{m != k} (1 - c_k/c_m) ]

    Only genuine (all-positive) configurations are accepted; virtual data
    must be rewritten first (see residue.virtual_normalize).
    """
    if not cfg.is_genuine:
        raise UsageError(
            "euler_char_PV needs a genuine configuration; apply "
            "virtual_normalize to signed data first"
        )
    y = p.y_val if isinstance(p, EvalPoint) else complex(p)
    a_vals = [v for v, _ in cfg.a_roots]
    b_vals = [v for v, _ in cfg.b_roots]
    c_vals = a_vals + b_vals
    if not c_vals:
        raise UsageError("configuration must contain at least one root")

    total = QSeries.zero(order)
    scale = 0.0
    for k, ck in enumerate(c_vals):
        num = QSeries.one(order)
        for a in a_vals:
            num = num * theta_series(y * a / ck, order)
        for b in b_vals:
            num = num * theta_series(b / (y * ck), order)
        den = QSeries.one(order)
        for cm in c_vals:
            den = den * phi_series(cm / ck, order) * phi_series(ck / cm, order)
        euler = complex(np.prod([1.0 - ck / cm for m, cm in enumerate(c_vals) if m != k]))
        if euler == 0:
            raise EllresError(f"coincident roots: Euler factor vanished at point {k}")
        term = num * den.inv() * (ck ** (-n) / euler)
        scale = max(scale, term.max_abs())
        total = total + term
    return GenusResult(series=total, scale=scale)


# -- model file format --------------------------------------------------------
#
# JSON schema consumed by the CLI:
#   {"lattice_rank": r,
#    "points": [{"tangent_weights": [{"y": 0, "s": 0, "t": [1, -1]}, ...]},
#               ...]}


def model_to_dict(model: FixedPointModel) -> dict:
    return {
        "lattice_rank": model.lattice_rank,
        "points": [
            {
                "tangent_weights": [
                    {"y": w.y_exp, "s": w.s_exp, "t": list(w.t_exps)} for w in pt
                ]
            }
            for pt in model.points
        ],
    }


def model_from_dict(data: dict) -> FixedPointModel:
    try:
        rank = int(data["lattice_rank"])
        raw_points = data["points"]
    except (KeyError, TypeError) as exc:
        raise UsageError(f"model file: missing or malformed field {exc}") from exc
    points = []
    for i, entry in enumerate(raw_points):
        try:
            raw_weights = entry["tangent_weights"]
        except (KeyError, TypeError) as exc:
            raise UsageError(
                f"model file: points[{i}] lacks 'tangent_weights'"
            ) from exc
        weights = []
        for j, wr in enumerate(raw_weights):
            try:
                weights.append(
                    WeightVector(
                        int(wr.get("y", 0)),
                        int(wr.get("s", 0)),
                        tuple(int(x) for x in wr["t"]),
                    )
                )
            except (KeyError, TypeError, ValueError) as exc:
                raise UsageError(
                    f"model file: points[{i}].tangent_weights[{j}] is "
                    f"malformed: {exc}"
                ) from exc
        points.append(tuple(weights))
    try:
        return FixedPointModel(lattice_rank=rank, points=tuple(points))
    except ValueError as exc:
        raise UsageError(f"model file: {exc}") from exc


def load_model(path: str) -> FixedPointModel:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise UsageError(
                    f"{path}:{exc.lineno}: invalid JSON ({exc.msg})"
                ) from exc
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    return model_from_dict(data)
