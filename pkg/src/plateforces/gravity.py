"""Newtonian and Yukawa forces for point masses and layered plates.

The plate expressions treat the plates as laterally infinite slabs of
the given area (edge effects in gravity are negligible for gaps
microns wide and plates centimeters wide).  Attractive forces are
positive magnitudes; a negative Yukawa coupling alpha yields a
negative (repulsive) Yukawa contribution.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .core import (
    CODATA2018,
    GapConfig,
    PhysicalConstants,
    PlateGeometry,
    PlateStack,
    YukawaParams,
    require_positive,
)


@dataclass(frozen=True)
class PointMassPair:
    """Two point masses, kg each."""

    mass_a: float
    mass_b: float

    def __post_init__(self) -> None:
        require_positive("mass_a", self.mass_a)
        require_positive("mass_b", self.mass_b)


@dataclass(frozen=True)
class PlatePairConfig:
    """Two facing layered plates of common footprint and their gap."""

    stack_a: PlateStack
    stack_b: PlateStack
    geometry: PlateGeometry
    gap: GapConfig


class LayerMode(enum.Enum):
    """Which layer pairs contribute to a stack-stack Yukawa force.

    METAL_ONLY keeps just the two facing layers; for micron ranges the
    films screen everything behind them and this is the conservative
    choice.  FULL_STACK sums every layer pair including the substrates,
    which matters once the range approaches the substrate thickness.
    """

    METAL_ONLY = "metal-only"
    FULL_STACK = "full-stack"


def yukawa_thickness_bracket(thickness: float, lam: float) -> float:
    """(1 - exp(-thickness/lam)) evaluated without cancellation.

    expm1 keeps full precision when thickness/lam is tiny, where the
    naive form loses all significant digits; the same helper is used
    on both the force side and the inversion side so the two are exact
    inverses of each other.
    """
    return -math.expm1(-thickness / lam)


def point_potential(
    pair: PointMassPair,
    separation: float,
    yukawa: YukawaParams,
    constants: PhysicalConstants = CODATA2018,
) -> float:
    """Gravitational potential energy with a Yukawa correction, in J.

    V(d) = -(G Ma Mb / d) * (1 + alpha * exp(-d / lam))

    Negative for alpha > -1 (bound configuration).
    """
    require_positive("separation", separation)
    k = constants.G * pair.mass_a * pair.mass_b
    return -k / separation * (1.0 + yukawa.alpha * math.exp(-separation / yukawa.lam))


def point_force(
    pair: PointMassPair,
    separation: float,
    yukawa: YukawaParams,
    constants: PhysicalConstants = CODATA2018,
) -> float:
    """Magnitude of the point-point force implied by point_potential, in N.

    F(d) = (G Ma Mb / d^2) * (1 + alpha * (1 + d/lam) * exp(-d/lam))
    """
    require_positive("separation", separation)
    k = constants.G * pair.mass_a * pair.mass_b
    x = separation / yukawa.lam
    return k / separation**2 * (1.0 + yukawa.alpha * (1.0 + x) * math.exp(-x))


def plate_newton(
    density_a: float,
    density_b: float,
    area: float,
    thickness_a: float,
    thickness_b: float,
    constants: PhysicalConstants = CODATA2018,
) -> float:
    """Newtonian attraction between two uniform slabs, in N.

    F = 2 pi G rho_a rho_b S tau_a tau_b

    Independent of the gap: an infinite slab pulls like an infinite
    sheet, and the sheet field does not decay with distance.
    """
    require_positive("density_a", density_a)
    require_positive("density_b", density_b)
    require_positive("area", area)
    require_positive("thickness_a", thickness_a)
    require_positive("thickness_b", thickness_b)
    return (
        2.0
        * math.pi
        * constants.G
        * density_a
        * density_b
        * area
        * thickness_a
        * thickness_b
    )


def plate_yukawa(
    density_a: float,
    density_b: float,
    area: float,
    thickness_a: float,
    thickness_b: float,
    separation: float,
    yukawa: YukawaParams,
    constants: PhysicalConstants = CODATA2018,
) -> float:
    """Yukawa force between two uniform slabs separated by a gap, in N.

    F = 2 pi G rho_a rho_b S alpha lam^2 exp(-d/lam)
        * (1 - exp(-tau_a/lam)) * (1 - exp(-tau_b/lam))

    Obtained by integrating the point-point Yukawa force over both slab
    volumes.  Only material within about one range lam of each facing
    surface contributes, hence the thickness brackets.
    """
    require_positive("density_a", density_a)
    require_positive("density_b", density_b)
    require_positive("area", area)
    require_positive("thickness_a", thickness_a)
    require_positive("thickness_b", thickness_b)
    require_positive("separation", separation)
    lam = yukawa.lam
    return (
        2.0
        * math.pi
        * constants.G
        * density_a
        * density_b
        * area
        * yukawa.alpha
        * lam**2
        * math.exp(-separation / lam)
        * yukawa_thickness_bracket(thickness_a, lam)
        * yukawa_thickness_bracket(thickness_b, lam)
    )


def stack_newton(
    config: PlatePairConfig, constants: PhysicalConstants = CODATA2018
) -> float:
    """Newtonian force between two layered plates: sum over layer pairs."""
    area = config.geometry.area()
    total = 0.0
    for layer_a in config.stack_a.layers:
        for layer_b in config.stack_b.layers:
            total += plate_newton(
                layer_a.density,
                layer_b.density,
                area,
                layer_a.thickness,
                layer_b.thickness,
                constants,
            )
    return total


def stack_yukawa(
    config: PlatePairConfig,
    yukawa: YukawaParams,
    mode: LayerMode = LayerMode.METAL_ONLY,
    constants: PhysicalConstants = CODATA2018,
) -> float:
    """Yukawa force between two layered plates, in N.

    METAL_ONLY uses just the facing layers at the bare gap; FULL_STACK
    sums plate_yukawa over all layer pairs, each at the bare gap plus
    the two layers' depth offsets.
    """
    area = config.geometry.area()
    d = config.gap.separation
    if mode is LayerMode.METAL_ONLY:
        layer_a = config.stack_a.layers[0]
        layer_b = config.stack_b.layers[0]
        return plate_yukawa(
            layer_a.density,
            layer_b.density,
            area,
            layer_a.thickness,
            layer_b.thickness,
            d,
            yukawa,
            constants,
        )
    if mode is LayerMode.FULL_STACK:
        total = 0.0
        for i, layer_a in enumerate(config.stack_a.layers):
            offset_a = config.stack_a.layer_offset(i)
            for j, layer_b in enumerate(config.stack_b.layers):
                gap_ij = d + offset_a + config.stack_b.layer_offset(j)
                total += plate_yukawa(
                    layer_a.density,
                    layer_b.density,
                    area,
                    layer_a.thickness,
                    layer_b.thickness,
                    gap_ij,
                    yukawa,
                    constants,
                )
        return total
    raise ValueError(f"unknown layer mode: {mode!r}")
