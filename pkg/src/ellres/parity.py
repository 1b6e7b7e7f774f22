"""Discrete parity and divisibility arithmetic for the wall-crossing applications.

Everything here is exact integer combinatorics: quiver Ext dimensions of
full flags, the enumeration of flag splittings, and surface Riemann-Roch
parity.  No series, no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Set, Tuple

from .errors import UsageError

SPLITTING_BUDGET = 16  # enumeration cap on d1 + d2


@dataclass(frozen=True)
class FullFlag:
    """Dimension vector of a full flag: 0 = v^0 <= ... <= v^{K+1} = d, steps 0 or 1."""

    dims: Tuple[int, ...]

    def __post_init__(self):
        if len(self.dims) < 1:
            raise ValueError("a flag needs at least one entry")
        if self.dims[0] != 0:
            raise ValueError("flags start at dimension 0")
        for a, b in zip(self.dims, self.dims[1:]):
            if b - a not in (0, 1):
                raise ValueError(f"step sizes must be 0 or 1, got {b - a}")

    @property
    def dim(self) -> int:
        return self.dims[-1]

    @property
    def length(self) -> int:
        return len(self.dims)

    @classmethod
    def from_jump_set(cls, jumps: Set[int], length: int) -> "FullFlag":
        """Flag of the given length jumping exactly at the 1-based steps in ``jumps``."""
        dims = [0]
        for i in range(1, length):
            dims.append(dims[-1] + (1 if i in jumps else 0))
        return cls(tuple(dims))


def ext_quiver(flag1: FullFlag, flag2: FullFlag) -> int:
    """sum_i v1^i * (v2^{i+1} - v2^i), the quiver Ext dimension."""
    if flag1.length != flag2.length:
        raise UsageError(
            f"flag lengths differ: {flag1.length} vs {flag2.length}"
        )
    v1, v2 = flag1.dims, flag2.dims
    return sum(v1[i] * (v2[i + 1] - v2[i]) for i in range(len(v1) - 1))


def split_flags(subset: Tuple[int, ...], d1: int, d2: int) -> Tuple[FullFlag, FullFlag]:
    """The pair of flags encoded by a d1-subset of {1, .., d1 + d2}."""
    d = d1 + d2
    jumps1 = set(subset)
    jumps2 = set(range(1, d + 1)) - jumps1
    return (
        FullFlag.from_jump_set(jumps1, d + 1),
        FullFlag.from_jump_set(jumps2, d + 1),
    )


def splitting_diff_set(d1: int, d2: int) -> Set[int]:
    """All values of ext(V1, V2) - ext(V2, V1) over splittings of a full flag.

    Enumerates the C(d1 + d2, d1) subset-encoded splittings by brute force.
    The expected answer (asserted by the suites, not here) is the arithmetic
    progression -d1*d2, -d1*d2 + 2, ..., d1*d2.
    """
    if d1 < 0 or d2 < 0:
        raise UsageError("dimensions must be nonnegative")
    if d1 + d2 > SPLITTING_BUDGET:
        raise UsageError(
            f"d1 + d2 = {d1 + d2} exceeds the enumeration budget "
            f"{SPLITTING_BUDGET}"
        )
    d = d1 + d2
    out: Set[int] = set()
    for subset in combinations(range(1, d + 1), d1):
        f1, f2 = split_flags(subset, d1, d2)
        out.add(ext_quiver(f1, f2) - ext_quiver(f2, f1))
    return out


@dataclass(frozen=True)
class SurfaceClass:
    """Surface intersection data entering the Riemann-Roch parity formulas.

    In spin mode the canonical class is K = 2D and the inputs are the
    D-quantities, which makes every parity statement an exact even-integer
    computation: K^2 = 4 D^2 and c1.K = 2 c1.D by construction.
    """

    rank: int = 1
    c1_dot_K: int = 0
    K_squared: int = 0
    spin: bool = False
    c1_dot_D: Optional[int] = None
    D_squared: Optional[int] = None

    def __post_init__(self):
        if self.spin:
            if self.c1_dot_D is None or self.D_squared is None:
                raise ValueError("spin mode needs c1_dot_D and D_squared")
            object.__setattr__(self, "c1_dot_K", 2 * self.c1_dot_D)
            object.__setattr__(self, "K_squared", 4 * self.D_squared)

    @classmethod
    def spin_surface(cls, rank: int, c1_dot_D: int, D_squared: int) -> "SurfaceClass":
        return cls(rank=rank, spin=True, c1_dot_D=c1_dot_D, D_squared=D_squared)


def hrr_parity_diff(surface: SurfaceClass, rank_f: int) -> int:
    """chi(S, F) - chi(S, F (x) K_S) = (1 - rank F)/2 * K^2 - c1(F).K.

    Computed without fractional intermediates in spin mode, where it equals
    (1 - rank F) * 2 * D^2 - 2 * c1(F).D and is therefore manifestly even.
    """
    if surface.spin:
        return (1 - rank_f) * 2 * surface.D_squared - 2 * surface.c1_dot_D  # type: ignore[operator]
    num = (1 - rank_f) * surface.K_squared
    if num % 2 != 0:
        raise UsageError(
            "(1 - rank F) * K^2 is odd; the difference is not an integer "
            "outside spin mode"
        )
    return num // 2 - surface.c1_dot_K


@dataclass(frozen=True)
class BundleData:
    """Rank and c1-pairing of a sheaf class; the pairing is against K, or
    against D in spin mode."""

    rank: int
    c1_pair: int


def vw_ext_parity(surface: SurfaceClass, f1: BundleData, f2: BundleData) -> int:
    """Parity of chi_S(F1, F2) + chi_S(F2, F1); zero in spin mode.

    chi(F1, F2) - chi(F2, F1) equals the Riemann-Roch difference of the Hom
    class G = F1^dual (x) F2, of rank r1 r2 and c1 = r1 c1(F2) - r2 c1(F1),
    so the sum's parity is that difference mod 2.
    """
    if not surface.spin:
        raise UsageError("vw_ext_parity is defined in spin mode")
    r1, r2 = f1.rank, f2.rank
    hom_c1_dot_d = r1 * f2.c1_pair - r2 * f1.c1_pair
    hom_surface = SurfaceClass.spin_surface(
        rank=r1 * r2, c1_dot_D=hom_c1_dot_d, D_squared=surface.D_squared  # type: ignore[arg-type]
    )
    parity = hrr_parity_diff(hom_surface, r1 * r2) % 2
    assert parity == 0, "spin-mode parity must vanish"
    return parity
