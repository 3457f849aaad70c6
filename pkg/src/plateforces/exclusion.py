"""Yukawa exclusion curves from a stated force resolution.

With the plate Yukawa force as the would-be signal, the smallest
coupling alpha the apparatus can see at each range lam follows from
inverting the force expression at the force resolution.  Anything
above the resulting curve would have produced a detectable force, so
the curve is an upper bound on allowed couplings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .core import CODATA2018, PhysicalConstants, require_positive
from .errors import DomainError, InvalidParameterError
from .gravity import yukawa_thickness_bracket


@dataclass(frozen=True)
class ResolutionSpec:
    """Apparatus summary for the inversion: what force it can see and
    what plates it sees it with.

    force_resolution in N; gap in m; densities of the two facing layers
    in kg/m^3; their thicknesses in m; plate area in m^2.
    """

    force_resolution: float
    gap: float
    density_a: float
    density_b: float
    thickness_a: float
    thickness_b: float
    area: float

    def __post_init__(self) -> None:
        require_positive("force_resolution", self.force_resolution)
        require_positive("gap", self.gap)
        require_positive("density_a", self.density_a)
        require_positive("density_b", self.density_b)
        require_positive("thickness_a", self.thickness_a)
        require_positive("thickness_b", self.thickness_b)
        require_positive("area", self.area)

    def with_thickness(self, thickness: float) -> "ResolutionSpec":
        """Same apparatus with both facing layers at a new thickness."""
        return replace(self, thickness_a=thickness, thickness_b=thickness)


def alpha_bound(
    lam: float, spec: ResolutionSpec, constants: PhysicalConstants = CODATA2018
) -> float:
    """Smallest detectable |alpha| at range lam, dimensionless.

    Exact inversion of the slab-slab Yukawa force at the resolution:

        alpha = F_res * exp(d/lam) /
                (2 pi G rho_a rho_b S lam^2
                 * (1 - exp(-tau_a/lam)) * (1 - exp(-tau_b/lam)))

    Uses the same cancellation-safe thickness bracket as the force
    expression, so feeding the bound back into the force reproduces
    the resolution exactly.
    """
    require_positive("lam", lam)
    denominator = (
        2.0
        * math.pi
        * constants.G
        * spec.density_a
        * spec.density_b
        * spec.area
        * lam**2
        * yukawa_thickness_bracket(spec.thickness_a, lam)
        * yukawa_thickness_bracket(spec.thickness_b, lam)
    )
    return spec.force_resolution * math.exp(spec.gap / lam) / denominator


def _loglog_interp(lam: float, lambdas: tuple[float, ...], alphas: tuple[float, ...], label: str) -> float:
    if not lambdas[0] <= lam <= lambdas[-1]:
        raise DomainError(
            f"lambda {lam:g} m outside the {label} domain "
            f"[{lambdas[0]:g}, {lambdas[-1]:g}] m; extrapolation is not supported"
        )
    log_alpha = np.interp(
        math.log(lam), np.log(np.asarray(lambdas)), np.log(np.asarray(alphas))
    )
    return float(math.exp(log_alpha))


def _check_curve(lambdas: tuple[float, ...], alphas: tuple[float, ...]) -> None:
    if len(lambdas) != len(alphas):
        raise InvalidParameterError(
            f"{len(lambdas)} lambda values but {len(alphas)} alpha values"
        )
    if len(lambdas) < 2:
        raise InvalidParameterError("a curve needs at least two points")
    for lam, alpha in zip(lambdas, alphas):
        require_positive("lambda", lam)
        require_positive("alpha", alpha)
    for left, right in zip(lambdas, lambdas[1:]):
        if not right > left:
            raise InvalidParameterError(
                f"lambda grid must be strictly increasing; {right!r} follows {left!r}"
            )


@dataclass(frozen=True)
class ExclusionCurve:
    """alpha_bound sampled on a strictly increasing lambda grid."""

    lambdas: tuple[float, ...]
    alphas: tuple[float, ...]
    spec: ResolutionSpec

    def __post_init__(self) -> None:
        object.__setattr__(self, "lambdas", tuple(self.lambdas))
        object.__setattr__(self, "alphas", tuple(self.alphas))
        _check_curve(self.lambdas, self.alphas)

    def domain(self) -> tuple[float, float]:
        return self.lambdas[0], self.lambdas[-1]

    def alpha_at(self, lam: float) -> float:
        """Bound at lam by log-log interpolation (exact on power laws)."""
        return _loglog_interp(lam, self.lambdas, self.alphas, "curve")


@dataclass(frozen=True)
class PriorBounds:
    """Previously published bounds on the same lambda axis."""

    lambdas: tuple[float, ...]
    alphas: tuple[float, ...]
    source: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "lambdas", tuple(self.lambdas))
        object.__setattr__(self, "alphas", tuple(self.alphas))
        _check_curve(self.lambdas, self.alphas)

    def domain(self) -> tuple[float, float]:
        return self.lambdas[0], self.lambdas[-1]

    def alpha_at(self, lam: float) -> float:
        return _loglog_interp(lam, self.lambdas, self.alphas, "prior-bounds")


def exclusion_scan(
    spec: ResolutionSpec,
    lambda_min: float,
    lambda_max: float,
    n_points: int,
    thicknesses: tuple[float, ...],
    constants: PhysicalConstants = CODATA2018,
) -> list[ExclusionCurve]:
    """One exclusion curve per facing-layer thickness.

    The lambda grid is log-spaced with n_points from lambda_min to
    lambda_max inclusive; every curve shares it.  Output order follows
    the thicknesses argument.
    """
    require_positive("lambda_min", lambda_min)
    require_positive("lambda_max", lambda_max)
    if not lambda_max > lambda_min:
        raise DomainError(
            f"degenerate scan: lambda_max {lambda_max:g} must exceed "
            f"lambda_min {lambda_min:g}"
        )
    if n_points < 2:
        raise DomainError(f"degenerate scan: need at least 2 points, got {n_points}")
    if not thicknesses:
        raise InvalidParameterError("thicknesses must not be empty")
    grid = tuple(
        float(x)
        for x in np.logspace(math.log10(lambda_min), math.log10(lambda_max), n_points)
    )
    curves = []
    for thickness in thicknesses:
        require_positive("thickness", thickness)
        curve_spec = spec.with_thickness(thickness)
        alphas = tuple(alpha_bound(lam, curve_spec, constants) for lam in grid)
        curves.append(ExclusionCurve(lambdas=grid, alphas=alphas, spec=curve_spec))
    return curves


def improvement_factor(new: ExclusionCurve, prior: PriorBounds, lam: float) -> float:
    """How far the new curve undercuts the prior bound at lam.

    Ratio prior/new of interpolated bounds; > 1 means improvement.
    lam must lie inside both domains.
    """
    new_lo, new_hi = new.domain()
    prior_lo, prior_hi = prior.domain()
    if not (new_lo <= lam <= new_hi and prior_lo <= lam <= prior_hi):
        raise DomainError(
            f"lambda {lam:g} m must lie inside both domains: "
            f"curve [{new_lo:g}, {new_hi:g}] m, "
            f"prior [{prior_lo:g}, {prior_hi:g}] m"
        )
    return prior.alpha_at(lam) / new.alpha_at(lam)
