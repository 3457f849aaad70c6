import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))

from plateforces import (
    GapConfig,
    MaterialLayer,
    PlateGeometry,
    PlatePairConfig,
    PlateStack,
    load_config,
)

REPO_ROOT = pathlib.Path(__file__).resolve().parent.parent
BASELINE_CONFIG_PATH = REPO_ROOT / "configs" / "baseline.ini"

# Baseline numbers shared across tests: 10 cm x 12 cm plates, 5 um gap.
AREA = 0.012
PERIMETER = 0.44
GAP = 5e-6
TEMPERATURE = 300.0


@pytest.fixture
def geometry() -> PlateGeometry:
    return PlateGeometry(length=0.10, width=0.12)


@pytest.fixture
def glass_pair(geometry) -> PlatePairConfig:
    """Bare 15 mm glass plates: the minimal mass configuration."""
    glass = PlateStack((MaterialLayer("glass", 3.0e3, 15e-3),))
    return PlatePairConfig(
        stack_a=glass,
        stack_b=glass,
        geometry=geometry,
        gap=GapConfig(separation=GAP, temperature=TEMPERATURE),
    )


@pytest.fixture
def gold_glass_pair(geometry) -> PlatePairConfig:
    """Gold-coated glass plates: the realistic stack."""
    stack = PlateStack(
        (
            MaterialLayer("gold", 19.3e3, 10e-6),
            MaterialLayer("glass", 3.0e3, 15e-3),
        )
    )
    return PlatePairConfig(
        stack_a=stack,
        stack_b=stack,
        geometry=geometry,
        gap=GapConfig(separation=GAP, temperature=TEMPERATURE),
    )


@pytest.fixture
def baseline_config():
    return load_config(str(BASELINE_CONFIG_PATH))
