"""Character-lattice weight vectors and numeric torus evaluation points.

A ``WeightVector`` is an integer vector of exponents: a distinguished y
exponent, a distinguished s exponent (the wall-crossing circle coordinate)
and a lattice part of length r.  Addition of weight vectors corresponds to
multiplying characters; evaluation at an ``EvalPoint`` is monomial
evaluation.  Keeping y and s as exponents lets every separation constraint
a suite needs ("this theta argument must stay away from 1") be expressed as
a weight vector handed to the rejection sampler.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from .errors import SamplingError


@dataclass(frozen=True)
class WeightVector:
    y_exp: int = 0
    s_exp: int = 0
    t_exps: Tuple[int, ...] = ()

    @classmethod
    def unit(cls, i: int, rank: int) -> "WeightVector":
        """The i-th lattice basis character e_i."""
        t = [0] * rank
        t[i] = 1
        return cls(0, 0, tuple(t))

    @classmethod
    def y_shift(cls, rank: int, power: int = 1) -> "WeightVector":
        return cls(power, 0, (0,) * rank)

    @property
    def rank(self) -> int:
        return len(self.t_exps)

    def is_zero(self) -> bool:
        return self.y_exp == 0 and self.s_exp == 0 and not any(self.t_exps)

    def _check_rank(self, other: "WeightVector") -> None:
        if self.rank != other.rank:
            raise ValueError(f"lattice ranks differ: {self.rank} vs {other.rank}")

    def __add__(self, other: "WeightVector") -> "WeightVector":
        self._check_rank(other)
        return WeightVector(
            self.y_exp + other.y_exp,
            self.s_exp + other.s_exp,
            tuple(a + b for a, b in zip(self.t_exps, other.t_exps)),
        )

    def __sub__(self, other: "WeightVector") -> "WeightVector":
        return self + (-other)

    def __neg__(self) -> "WeightVector":
        return WeightVector(-self.y_exp, -self.s_exp, tuple(-a for a in self.t_exps))


@dataclass(frozen=True)
class EvalPoint:
    """Numeric stand-in for a point of the torus (and the y, s coordinates).

    ``s_val`` may be None when s is the integration variable rather than a
    number.  All stored entries must be nonzero.
    """

    y_val: complex
    t_vals: Tuple[complex, ...]
    s_val: Optional[complex] = None

    def __post_init__(self):
        if self.y_val == 0 or any(t == 0 for t in self.t_vals):
            raise ValueError("EvalPoint entries must be nonzero")
        if self.s_val is not None and self.s_val == 0:
            raise ValueError("s_val must be nonzero when present")

    @property
    def rank(self) -> int:
        return len(self.t_vals)


def eval_weight(w: WeightVector, p: EvalPoint) -> complex:
    """Evaluate the monomial y^{y_exp} s^{s_exp} prod t_i^{m_i} at p."""
    if w.rank != p.rank:
        raise ValueError(f"weight rank {w.rank} != point rank {p.rank}")
    if w.s_exp != 0 and p.s_val is None:
        raise ValueError("weight involves s but the point carries no s_val")
    out = complex(1.0)
    if w.y_exp:
        out *= p.y_val ** w.y_exp
    if w.s_exp:
        out *= p.s_val ** w.s_exp  # type: ignore[operator]
    for t, m in zip(p.t_vals, w.t_exps):
        if m:
            out *= t ** m
    return out


def root_of_unity(n: int, k: int) -> complex:
    """exp(2 pi i k / n) with the trivial root excluded.

    The wall-crossing statements all require a root of unity different from
    1, so k = 0 mod n is rejected.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if k % n == 0:
        raise ValueError("k = 0 mod n gives the excluded trivial root 1")
    return cmath.exp(2j * cmath.pi * k / n)


DEFAULT_SPREAD = 0.2
DEFAULT_SEPARATION = 1e-3


def sample_generic_point(
    seed: int,
    rank: int,
    spread: float = DEFAULT_SPREAD,
    *,
    constraints: Sequence[WeightVector] = (),
    y_val: Optional[complex] = None,
    s_val: Optional[complex] = None,
    separation: float = DEFAULT_SEPARATION,
    max_tries: int = 1000,
) -> EvalPoint:
    """Deterministically sample a generic torus point.

    Each t_i is exp(2 pi i u) * rho with u uniform and rho in
    [1 - spread, 1 + spread].  The candidate is rejected until every
    constraint weight evaluates at least ``separation`` away from 1.  When
    ``y_val`` is None a generic y on the same annulus is sampled too, so
    constraints with a y exponent are honored either way.
    """
    if not 0 < spread < 0.5:
        raise ValueError("spread must lie in (0, 0.5)")
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        t_vals = tuple(
            complex(
                rng.uniform(1 - spread, 1 + spread)
                * np.exp(2j * np.pi * rng.uniform())
            )
            for _ in range(rank)
        )
        y_candidate = y_val
        if y_candidate is None:
            y_candidate = complex(
                rng.uniform(1 - spread, 1 + spread) * np.exp(2j * np.pi * rng.uniform())
            )
        p = EvalPoint(y_val=y_candidate, t_vals=t_vals, s_val=s_val)
        if all(abs(eval_weight(w, p) - 1.0) >= separation for w in constraints):
            return p
    raise SamplingError(
        f"could not satisfy {len(constraints)} separation constraints in "
        f"{max_tries} tries (separation={separation})"
    )


def with_y_shifts(weights: Iterable[WeightVector]) -> list[WeightVector]:
    """Constraint list covering each weight w and its y-twist y * w.

    Localization denominators involve theta(w) and theta(y w); both must stay
    away from their zero at argument 1.
    """
    out: list[WeightVector] = []
    for w in weights:
        out.append(w)
        out.append(w + WeightVector.y_shift(w.rank))
    return out
