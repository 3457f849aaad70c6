"""Electrostatic background and the combined force budget.

The budget gathers every force acting between the plates at one gap:
the Casimir signal (zero-T and thermal pieces), the Newtonian pull of
the plates, the hypothetical Yukawa signal being hunted, and the
electrostatic background from residual surface potentials, next to the
instrument's force resolution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .casimir import THERMAL_TRUST_MIN_GAP, ThermalModel, casimir_zero_t, thermal_casimir
from .core import CODATA2018, PhysicalConstants, YukawaParams, require_non_negative, require_positive
from .errors import InvalidParameterError
from .gravity import LayerMode, PlatePairConfig, stack_newton, stack_yukawa


@dataclass(frozen=True)
class ElectrostaticConfig:
    """Residual (stray) voltage across the gap and the capacitor geometry.

    stray_voltage in V (zero allowed: perfectly compensated plates),
    area in m^2, gap in m.
    """

    stray_voltage: float
    area: float
    gap: float

    def __post_init__(self) -> None:
        require_non_negative("stray_voltage", self.stray_voltage)
        require_positive("area", self.area)
        require_positive("gap", self.gap)


def electrostatic_force(
    config: ElectrostaticConfig, constants: PhysicalConstants = CODATA2018
) -> float:
    """Attraction of a parallel-plate capacitor at the stray voltage, in N.

    F = epsilon0 S V^2 / (2 d^2)
    """
    return (
        constants.epsilon0
        * config.area
        * config.stray_voltage**2
        / (2.0 * config.gap**2)
    )


def voltage_control_requirement(
    config: ElectrostaticConfig,
    residual_target: float,
    constants: PhysicalConstants = CODATA2018,
) -> float:
    """Fraction of the stray voltage that may survive compensation.

    Returns the ratio V_allowed / V_stray such that the electrostatic
    force at V_allowed equals residual_target.  Because the force is
    quadratic in V this is sqrt(target / background).  If the target is
    already at or above the uncompensated background the answer is
    capped at 1 (no compensation needed).
    """
    require_positive("residual_target", residual_target)
    background = electrostatic_force(config, constants)
    if residual_target >= background:
        return 1.0
    return math.sqrt(residual_target / background)


@dataclass(frozen=True)
class ForceBudget:
    """All forces at one gap, as positive magnitudes in N.

    thermal is the ideal-mirror thermal term before the reduction
    factor; eta records the factor so consumers can form the total
    Casimir force as casimir + eta * thermal.  yukawa_hypothesis is the
    magnitude of the hypothetical signal for the reference coupling.
    flags carries human-readable validity warnings (e.g. the thermal
    expression being extrapolated below its trusted gap).
    """

    gap: float
    casimir: float
    thermal: float
    newton: float
    yukawa_hypothesis: float
    electrostatic: float
    resolution: float
    eta: float = 1.0
    flags: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        require_positive("gap", self.gap)
        for name in ("casimir", "thermal", "newton", "yukawa_hypothesis", "electrostatic", "resolution"):
            require_non_negative(name, getattr(self, name))
        object.__setattr__(self, "flags", tuple(self.flags))

    def total_casimir(self) -> float:
        return self.casimir + self.eta * self.thermal


def build_budget(
    plates: PlatePairConfig,
    thermal_model: ThermalModel,
    electrostatic: ElectrostaticConfig,
    yukawa_reference: YukawaParams,
    force_resolution: float,
    mode: LayerMode = LayerMode.METAL_ONLY,
    constants: PhysicalConstants = CODATA2018,
) -> ForceBudget:
    """Assemble the full force budget for one plate configuration.

    The electrostatic geometry must agree with the plate geometry; a
    mismatch means two different experiments were described and is
    rejected rather than silently mixed.
    """
    require_positive("force_resolution", force_resolution)
    area = plates.geometry.area()
    if electrostatic.area != area:
        raise InvalidParameterError(
            f"electrostatic area {electrostatic.area!r} m^2 does not match "
            f"plate area {area!r} m^2"
        )
    if electrostatic.gap != plates.gap.separation:
        raise InvalidParameterError(
            f"electrostatic gap {electrostatic.gap!r} m does not match "
            f"plate gap {plates.gap.separation!r} m"
        )
    d = plates.gap.separation
    flags: list[str] = []
    if d < THERMAL_TRUST_MIN_GAP:
        flags.append(
            f"thermal: gap {d:g} m is below the {THERMAL_TRUST_MIN_GAP:g} m "
            "trust threshold for the classical thermal expression"
        )
    flags.append(
        "electrostatic: assumes a uniform stray potential; patch-potential "
        "patterns are not modeled"
    )
    return ForceBudget(
        gap=d,
        casimir=casimir_zero_t(area, d, constants),
        thermal=thermal_casimir(area, d, plates.gap.temperature, constants),
        newton=stack_newton(plates, constants),
        yukawa_hypothesis=abs(stack_yukawa(plates, yukawa_reference, mode, constants)),
        electrostatic=electrostatic_force(electrostatic, constants),
        resolution=force_resolution,
        eta=thermal_model.reduction_factor,
        flags=tuple(flags),
    )
