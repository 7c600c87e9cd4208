"""JSON run configuration: physical constants shared by every CLI command.

All units are SI and spelled out in the key names, so an ohm-per-meter can
never be mistaken for an ohm.  Unknown keys are rejected outright.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .circuit import TetherSpec
from .equilibrium import DEFAULT_GRAVITY
from .errors import ConfigError
from .powertrain import QuadcopterSpec


@dataclass(frozen=True)
class RunConfig:
    tether: TetherSpec
    quadcopter: QuadcopterSpec
    source_voltage: float
    gravity: float = DEFAULT_GRAVITY


def _require_number(section: str, key: str, value, minimum=None, strict=False) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{section}.{key} must be a number, got {value!r}")
    value = float(value)
    if minimum is not None and (value <= minimum if strict else value < minimum):
        bound = "above" if strict else "at least"
        raise ConfigError(f"{section}.{key} must be {bound} {minimum}, got {value}")
    return value


def _check_keys(section: str, mapping: dict, required: set[str], optional: set[str] = frozenset()):
    if not isinstance(mapping, dict):
        raise ConfigError(f"{section} must be an object")
    keys = set(mapping)
    unknown = keys - required - optional
    if unknown:
        raise ConfigError(f"unknown key(s) in {section}: {sorted(unknown)}")
    missing = required - keys
    if missing:
        raise ConfigError(f"missing key(s) in {section}: {sorted(missing)}")


def parse_config(data: dict) -> RunConfig:
    """Validate a decoded configuration tree and build the typed RunConfig."""
    _check_keys("config", data, {"tether", "quadcopter", "source"},
                {"gravity_m_per_s2"})
    _check_keys("tether", data["tether"], {"rho_ohm_per_m", "lambda_kg_per_m"})
    _check_keys("quadcopter", data["quadcopter"], {"mass_kg", "c_p_w_per_n15"},
                {"overhead_w"})
    _check_keys("source", data["source"], {"voltage_v"})

    tether = TetherSpec(
        rho=_require_number("tether", "rho_ohm_per_m",
                            data["tether"]["rho_ohm_per_m"], 0.0, strict=True),
        lam=_require_number("tether", "lambda_kg_per_m",
                            data["tether"]["lambda_kg_per_m"], 0.0, strict=True),
    )
    quad = QuadcopterSpec(
        mass=_require_number("quadcopter", "mass_kg",
                             data["quadcopter"]["mass_kg"], 0.0, strict=True),
        c_p=_require_number("quadcopter", "c_p_w_per_n15",
                            data["quadcopter"]["c_p_w_per_n15"], 0.0, strict=True),
        overhead=_require_number("quadcopter", "overhead_w",
                                 data["quadcopter"].get("overhead_w", 0.0), 0.0),
    )
    voltage = _require_number("source", "voltage_v",
                              data["source"]["voltage_v"], 0.0, strict=True)
    gravity = _require_number("config", "gravity_m_per_s2",
                              data.get("gravity_m_per_s2", DEFAULT_GRAVITY),
                              0.0, strict=True)
    return RunConfig(tether=tether, quadcopter=quad,
                     source_voltage=voltage, gravity=gravity)


def load_config(path: str | Path) -> RunConfig:
    """Read and validate a JSON configuration file."""
    try:
        text = Path(path).read_text()
    except OSError as err:
        raise ConfigError(f"cannot read config {path}: {err}") from err
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ConfigError(f"config {path} is not valid JSON: {err}") from err
    if not isinstance(data, dict):
        raise ConfigError(f"config {path} must contain a JSON object")
    return parse_config(data)
