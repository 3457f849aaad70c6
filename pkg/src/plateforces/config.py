"""Experiment description files and prior-bounds files.

Config files are INI.  Lengths accept a unit suffix (nm, um, mm, cm,
m); bare numbers are meters.  Everything is normalized to SI here so
the physics modules never see a unit string.  Example:

    [geometry]
    length = 0.10 m
    width = 12 cm

    [stack_a]
    layer_0 = gold, 19.3e3, 10 um
    layer_1 = glass, 3.0e3, 15 mm

    [gap]
    separation = 5 um
    temperature = 300

Prior-bounds files are two-column CSV ``lambda_m,alpha`` with optional
``#`` comment lines and an optional literal header row.
"""

from __future__ import annotations

import configparser
import decimal
import hashlib
import re
from dataclasses import dataclass

from .balance import SHEAR_MODULUS, BalanceConfig, TiltConfig, TorsionWire
from .budget import ElectrostaticConfig
from .casimir import ThermalModel
from .core import GapConfig, MaterialLayer, PlateGeometry, PlateStack, YukawaParams
from .errors import ConfigError, InvalidParameterError
from .exclusion import PriorBounds, ResolutionSpec
from .gravity import PlatePairConfig

_LENGTH_UNITS = {
    "nm": "1e-9",
    "um": "1e-6",
    "µm": "1e-6",
    "mm": "1e-3",
    "cm": "1e-2",
    "m": "1",
}

_LENGTH_RE = re.compile(r"^\s*([^\s]+?)\s*(nm|um|µm|mm|cm|m)?\s*$")


def parse_length(text: str) -> float:
    """Parse '5 um', '12cm', '0.1 m' or a bare number (meters) to meters.

    The unit scaling happens in decimal so that e.g. '5 um' yields the
    same float as the literal 5e-6 rather than a value one ulp off.
    """
    match = _LENGTH_RE.match(text)
    if match is None:
        raise InvalidParameterError(f"cannot parse length {text!r}")
    number, unit = match.groups()
    try:
        value = decimal.Decimal(number) * decimal.Decimal(_LENGTH_UNITS[unit or "m"])
    except decimal.InvalidOperation:
        raise InvalidParameterError(f"cannot parse length {text!r}") from None
    return float(value)


@dataclass(frozen=True)
class ExperimentConfig:
    """Fully parsed experiment description, all SI.

    source_sha256 is the hash of the config file bytes, recorded in
    output metadata so results can be traced to their inputs.
    """

    geometry: PlateGeometry
    stack_a: PlateStack
    stack_b: PlateStack
    gap: GapConfig
    thermal: ThermalModel
    stray_voltage: float
    wire: TorsionWire
    balance: BalanceConfig
    tilt: TiltConfig
    force_resolution: float
    yukawa: YukawaParams
    source_sha256: str = ""

    def plate_pair(self) -> PlatePairConfig:
        return PlatePairConfig(
            stack_a=self.stack_a,
            stack_b=self.stack_b,
            geometry=self.geometry,
            gap=self.gap,
        )

    def electrostatic(self, gap: float | None = None) -> ElectrostaticConfig:
        return ElectrostaticConfig(
            stray_voltage=self.stray_voltage,
            area=self.geometry.area(),
            gap=self.gap.separation if gap is None else gap,
        )

    def resolution_spec(self) -> ResolutionSpec:
        """Inversion inputs built from the facing layers of each stack."""
        facing_a = self.stack_a.layers[0]
        facing_b = self.stack_b.layers[0]
        return ResolutionSpec(
            force_resolution=self.force_resolution,
            gap=self.gap.separation,
            density_a=facing_a.density,
            density_b=facing_b.density,
            thickness_a=facing_a.thickness,
            thickness_b=facing_b.thickness,
            area=self.geometry.area(),
        )


class _SectionReader:
    """Wraps one INI section so errors carry their file location."""

    def __init__(self, parser: configparser.ConfigParser, section: str):
        if not parser.has_section(section):
            raise ConfigError(f"missing section [{section}]")
        self._section = section
        self._proxy = parser[section]

    def raw(self, key: str) -> str:
        if key not in self._proxy:
            raise ConfigError(f"[{self._section}] {key}: missing")
        return self._proxy[key].strip()

    def raw_or(self, key: str, default: str | None) -> str | None:
        return self._proxy[key].strip() if key in self._proxy else default

    def number(self, key: str) -> float:
        text = self.raw(key)
        try:
            return float(text)
        except ValueError:
            raise ConfigError(f"[{self._section}] {key}: not a number: {text!r}") from None

    def length(self, key: str) -> float:
        text = self.raw(key)
        try:
            return parse_length(text)
        except InvalidParameterError as exc:
            raise ConfigError(f"[{self._section}] {key}: {exc}") from None


def _parse_stack(parser: configparser.ConfigParser, section: str) -> PlateStack:
    reader = _SectionReader(parser, section)
    indexed: list[tuple[int, str]] = []
    for key in parser[section]:
        match = re.fullmatch(r"layer_(\d+)", key)
        if match is None:
            raise ConfigError(
                f"[{section}] {key}: expected keys of the form layer_0, layer_1, ..."
            )
        indexed.append((int(match.group(1)), key))
    if not indexed:
        raise ConfigError(f"[{section}]: needs at least layer_0")
    indexed.sort()
    if indexed[0][0] != 0 or indexed[-1][0] != len(indexed) - 1:
        raise ConfigError(
            f"[{section}]: layer indices must run 0..{len(indexed) - 1} without gaps"
        )
    layers = []
    for _, key in indexed:
        text = reader.raw(key)
        parts = [part.strip() for part in text.split(",")]
        if len(parts) != 3:
            raise ConfigError(
                f"[{section}] {key}: expected 'name, density_kg_m3, thickness', got {text!r}"
            )
        name, density_text, thickness_text = parts
        try:
            density = float(density_text)
        except ValueError:
            raise ConfigError(
                f"[{section}] {key}: density not a number: {density_text!r}"
            ) from None
        try:
            thickness = parse_length(thickness_text)
        except InvalidParameterError as exc:
            raise ConfigError(f"[{section}] {key}: {exc}") from None
        try:
            layers.append(MaterialLayer(name=name, density=density, thickness=thickness))
        except InvalidParameterError as exc:
            raise ConfigError(f"[{section}] {key}: {exc}") from None
    return PlateStack(layers=tuple(layers))


def _parse_wire(parser: configparser.ConfigParser) -> TorsionWire:
    reader = _SectionReader(parser, "wire")
    material = reader.raw("material").lower()
    modulus_text = reader.raw_or("shear_modulus", None)
    if modulus_text is not None:
        try:
            shear_modulus = float(modulus_text)
        except ValueError:
            raise ConfigError(
                f"[wire] shear_modulus: not a number: {modulus_text!r}"
            ) from None
    elif material in SHEAR_MODULUS:
        shear_modulus = SHEAR_MODULUS[material]
    else:
        known = ", ".join(sorted(SHEAR_MODULUS))
        raise ConfigError(
            f"[wire] material: unknown material {material!r} "
            f"(known: {known}); set shear_modulus explicitly"
        )
    return TorsionWire(
        material=material,
        shear_modulus=shear_modulus,
        diameter=reader.length("diameter"),
        length=reader.length("length"),
    )


def load_config(path: str) -> ExperimentConfig:
    """Parse an experiment config file.

    Raises ConfigError (with section/key context) on malformed content
    and lets OSError propagate for unreadable paths.
    """
    with open(path, "rb") as handle:
        raw = handle.read()
    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        parser.read_string(raw.decode("utf-8"))
    except UnicodeDecodeError as exc:
        raise ConfigError(f"{path}: not valid UTF-8: {exc}") from None
    except configparser.Error as exc:
        raise ConfigError(f"{path}: {exc}") from None

    geometry_reader = _SectionReader(parser, "geometry")
    gap_reader = _SectionReader(parser, "gap")
    balance_reader = _SectionReader(parser, "balance")
    resolution_reader = _SectionReader(parser, "resolution")

    try:
        geometry = PlateGeometry(
            length=geometry_reader.length("length"),
            width=geometry_reader.length("width"),
        )
        stack_a = _parse_stack(parser, "stack_a")
        stack_b = _parse_stack(parser, "stack_b")
        gap = GapConfig(
            separation=gap_reader.length("separation"),
            temperature=gap_reader.number("temperature"),
        )
        if parser.has_section("thermal"):
            thermal = ThermalModel(
                reduction_factor=_SectionReader(parser, "thermal").number(
                    "reduction_factor"
                )
            )
        else:
            thermal = ThermalModel()
        stray_voltage = _SectionReader(parser, "electrostatic").number("stray_voltage")
        if stray_voltage < 0:
            raise ConfigError(
                f"[electrostatic] stray_voltage: must be >= 0, got {stray_voltage!r}"
            )
        wire = _parse_wire(parser)
        balance = BalanceConfig(
            torque_sensitivity=balance_reader.number("torque_sensitivity"),
            arm_length=balance_reader.length("arm_length"),
            min_displacement=balance_reader.length("min_displacement"),
        )
        if parser.has_section("tilt"):
            tilt_reader = _SectionReader(parser, "tilt")
            length_text = tilt_reader.raw_or("plate_length_along_tilt", None)
            tilt = TiltConfig(
                angle=tilt_reader.number("angle"),
                plate_length_along_tilt=(
                    geometry.width if length_text is None else parse_length(length_text)
                ),
            )
        else:
            # default: the parallelism spec over the wider plate side
            tilt = TiltConfig(angle=1e-6, plate_length_along_tilt=geometry.width)
        force_resolution = resolution_reader.number("force_resolution")
        if parser.has_section("yukawa"):
            yukawa_reader = _SectionReader(parser, "yukawa")
            yukawa = YukawaParams(
                alpha=yukawa_reader.number("alpha"),
                lam=yukawa_reader.length("lambda"),
            )
        else:
            yukawa = YukawaParams(alpha=1.0, lam=1e-5)
    except InvalidParameterError as exc:
        raise ConfigError(f"{path}: {exc}") from None

    return ExperimentConfig(
        geometry=geometry,
        stack_a=stack_a,
        stack_b=stack_b,
        gap=gap,
        thermal=thermal,
        stray_voltage=stray_voltage,
        wire=wire,
        balance=balance,
        tilt=tilt,
        force_resolution=force_resolution,
        yukawa=yukawa,
        source_sha256=hashlib.sha256(raw).hexdigest(),
    )


def ingest_prior_bounds(path: str, source: str = "") -> PriorBounds:
    """Read a prior-bounds CSV: columns lambda_m,alpha, '#' comments.

    Lines must come in strictly increasing lambda.  Errors name the
    offending line; a file with no data rows is rejected.
    """
    with open(path, "r", encoding="utf-8") as handle:
        lines = handle.readlines()
    lambdas: list[float] = []
    alphas: list[float] = []
    for line_no, line in enumerate(lines, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        if text.replace(" ", "") == "lambda_m,alpha":
            continue
        parts = [part.strip() for part in text.split(",")]
        if len(parts) != 2:
            raise ConfigError(
                f"{path}: line {line_no}: expected 2 columns (lambda_m,alpha), "
                f"got {len(parts)}: {text!r}"
            )
        try:
            lam, alpha = float(parts[0]), float(parts[1])
        except ValueError:
            raise ConfigError(
                f"{path}: line {line_no}: not numeric: {text!r}"
            ) from None
        if not lam > 0:
            raise ConfigError(f"{path}: line {line_no}: lambda must be > 0, got {lam!r}")
        if not alpha > 0:
            raise ConfigError(f"{path}: line {line_no}: alpha must be > 0, got {alpha!r}")
        if lambdas and not lam > lambdas[-1]:
            raise ConfigError(
                f"{path}: line {line_no}: lambda {lam!r} does not increase "
                f"past {lambdas[-1]!r}"
            )
        lambdas.append(lam)
        alphas.append(alpha)
    if len(lambdas) < 2:
        raise ConfigError(f"{path}: needs at least 2 data rows, found {len(lambdas)}")
    return PriorBounds(
        lambdas=tuple(lambdas), alphas=tuple(alphas), source=source or path
    )
