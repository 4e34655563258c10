"""Genus lower bounds for the compactified Severi curve of nodal elliptic curves.

For odd polarization genus ``g = 2r + 1`` the geometric genus is bounded below
by ``bl48(r - 1) * (9 - 1)``: the fixed-fiber count times one less than the
genus of the curve of bisections (at least 9).  This module assembles that
bound, fits its growth rate, and exposes the conditional ``4^(r+3)``-type
bound coming from the degeneracy-locus computation in :mod:`k3calc.chow`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chow import closed_form_genus_44
from .qseries import bl48_coefficient, eta_product

__all__ = [
    "OMEGA_GENUS_LB",
    "HEURISTIC_C",
    "BoundReport",
    "AsymptoticFit",
    "polarization_genus",
    "severi_lower_bound",
    "asymptotic_fit",
    "appendix_conjectural_bound",
]

# geometric genus of each component of the bisection curve is >= genus of a smooth (4,4)-curve
OMEGA_GENUS_LB = 9

# circle-method growth constant for prod (1 - q^m)^-48: 2*pi*sqrt(48/6)
HEURISTIC_C = 2 * math.pi * math.sqrt(8)


@dataclass(frozen=True)
class BoundReport:
    g: int
    r: int
    bl_count: int
    omega_genus_lb: int
    severi_genus_lb: int

    def __post_init__(self):
        if self.bl_count < 1:
            raise ValueError("bl_count must be positive")
        if self.severi_genus_lb != self.bl_count * (self.omega_genus_lb - 1):
            raise ValueError("severi_genus_lb must equal bl_count * (omega_genus_lb - 1)")

    def to_dict(self) -> dict:
        return {
            "g": self.g,
            "r": self.r,
            "bl_count": str(self.bl_count),
            "omega_genus_lb": self.omega_genus_lb,
            "severi_genus_lb": str(self.severi_genus_lb),
        }


@dataclass(frozen=True)
class AsymptoticFit:
    sample_range: tuple[int, int]
    estimated_C: float
    intercept: float
    max_relative_residual: float

    def to_dict(self) -> dict:
        return {
            "sample_range": list(self.sample_range),
            "estimated_C": self.estimated_C,
            "intercept": self.intercept,
            "max_relative_residual": self.max_relative_residual,
        }


def polarization_genus(self_intersection: int) -> int:
    """Genus ``g`` of curves in ``|L|`` from ``L^2 = 2g - 2``."""
    if self_intersection <= 0 or self_intersection % 2:
        raise ValueError(f"L^2 must be positive and even, got {self_intersection}")
    return self_intersection // 2 + 1


def _odd_genus_to_r(g: int) -> int:
    if g % 2 == 0:
        raise ValueError(
            f"g={g} is even; only odd genus g = 2r + 1 (the (4,4) double-cover degeneration) is supported"
        )
    if g < 3:
        raise ValueError(f"g must be at least 3, got {g}")
    return (g - 1) // 2


def severi_lower_bound(g: int, order: int | None = None) -> BoundReport:
    """Lower bound for the total geometric genus of the Severi curve at odd genus ``g``.

    ``order`` is forwarded to :func:`bl48_coefficient` so a sweep over many ``g``
    can reuse one expansion.
    """
    r = _odd_genus_to_r(g)
    bl = bl48_coefficient(r - 1, order)
    return BoundReport(
        g=g,
        r=r,
        bl_count=bl,
        omega_genus_lb=OMEGA_GENUS_LB,
        severi_genus_lb=bl * (OMEGA_GENUS_LB - 1),
    )


def asymptotic_fit(n_min: int, n_max: int) -> AsymptoticFit:
    """Least-squares fit of ``log bl48(n) ~ C sqrt(n) + b`` over ``n_min..n_max``."""
    if n_min < 10 or n_max <= n_min + 1:
        raise ValueError(f"need 10 <= n_min and at least 3 sample points, got [{n_min}, {n_max}]")
    coeffs = eta_product(-48, n_max + 1)
    ns = np.arange(n_min, n_max + 1)
    y = np.array([math.log(coeffs[n]) for n in ns])
    x = np.sqrt(ns)
    slope, intercept = np.polyfit(x, y, 1)
    resid = np.abs(y - (slope * x + intercept)) / np.abs(y)
    return AsymptoticFit(
        sample_range=(n_min, n_max),
        estimated_C=float(slope),
        intercept=float(intercept),
        max_relative_residual=float(resid.max()),
    )


def appendix_conjectural_bound(g: int) -> int:
    """Arithmetic genus of the degeneracy curve at ``g = 2r + 1``, ``r >= 5``.

    This is a *conjectural* bound for the Severi curve: it depends on the
    curve being related to the determinantal curve as conjectured, and is
    not a proven lower bound.
    """
    r = _odd_genus_to_r(g)
    if r < 5:
        raise ValueError(f"closed form holds for r >= 5 (g >= 11), got g={g}")
    return closed_form_genus_44(r)
