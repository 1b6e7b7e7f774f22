"""Equivariant elliptic genera from torus fixed-point data.

The package computes elliptic genera by localization over fixed-point
models, evaluates the wall-crossing contour integral by three independent
routes (simple-pole sums, annulus quadrature, projective-space
localization) and ships verification suites for the vanishing, blow-up,
flip and parity identities that the wall-crossing machinery predicts.

Series arithmetic runs on a compiled Cython core when available, with a
pure-numpy fallback selected at import; see ``ellres._backend.BACKEND``.
"""

from ._backend import BACKEND as KERNEL_BACKEND
from .geom import (
    ChernRootConfig,
    FixedPointModel,
    GenusResult,
    blowup_local_models,
    elliptic_genus,
    euler_char_PV,
    product_model,
    projective_space_model,
    total_space_model,
)
from .qseries import QSeries
from .residue import (
    IntegrandSpec,
    SIGMA_JK,
    SIGMA_RES,
    cn_direct,
    flip_check,
    holomorphy_probe,
    integrand_at,
    quadrature_residue,
    vanishing_check,
    virtual_normalize,
)
from .theta import (
    phi_of_roots,
    phi_series,
    theta_of_roots,
    theta_prime_at_one,
    theta_series,
)
from .weights import EvalPoint, WeightVector, eval_weight, root_of_unity, sample_generic_point

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "QSeries",
    "ChernRootConfig",
    "FixedPointModel",
    "GenusResult",
    "EvalPoint",
    "WeightVector",
    "IntegrandSpec",
    "SIGMA_JK",
    "SIGMA_RES",
    "blowup_local_models",
    "cn_direct",
    "elliptic_genus",
    "euler_char_PV",
    "eval_weight",
    "flip_check",
    "holomorphy_probe",
    "integrand_at",
    "phi_of_roots",
    "phi_series",
    "product_model",
    "projective_space_model",
    "quadrature_residue",
    "root_of_unity",
    "sample_generic_point",
    "theta_of_roots",
    "theta_prime_at_one",
    "theta_series",
    "total_space_model",
    "vanishing_check",
    "virtual_normalize",
]
