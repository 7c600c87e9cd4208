"""Thrust-to-electrical-power conversion for a single quadcopter.

Hover power follows the actuator disk law P = c_p * f^1.5 plus an optional
constant avionics overhead.  The power constant can either be measured or
derived from propeller disk area, air density, and efficiencies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InsufficientPower, NegativeThrust


@dataclass(frozen=True)
class QuadcopterSpec:
    """Mass and power-train constant of one vehicle.

    c_p is in W/N^1.5; overhead is constant electronics power in W and
    defaults to zero (negligible next to the rotors).
    """

    mass: float
    c_p: float
    overhead: float = 0.0

    def __post_init__(self):
        if self.mass <= 0.0:
            raise ValueError(f"mass must be positive, got {self.mass}")
        if self.c_p <= 0.0:
            raise ValueError(f"c_p must be positive, got {self.c_p}")
        if self.overhead < 0.0:
            raise ValueError(f"overhead must be nonnegative, got {self.overhead}")


@dataclass(frozen=True)
class PropellerParams:
    """Propeller and powertrain data behind the power constant."""

    area: float                  # single-propeller disk area, m^2
    air_density: float           # kg/m^3
    prop_efficiency: float       # figure-of-merit based, in (0, 1]
    powertrain_efficiency: float # motor + ESC, in (0, 1]
    count: int = 4

    def __post_init__(self):
        if min(self.area, self.air_density, self.prop_efficiency,
               self.powertrain_efficiency) <= 0.0:
            raise ValueError("all propeller parameters must be positive")
        if self.prop_efficiency > 1.0 or self.powertrain_efficiency > 1.0:
            raise ValueError("efficiencies cannot exceed 1")
        if self.count < 1:
            raise ValueError(f"propeller count must be at least 1, got {self.count}")


def power_constant(p: PropellerParams) -> float:
    """Actuator-disk power constant, W/N^1.5."""
    return 1.0 / (
        p.prop_efficiency
        * p.powertrain_efficiency
        * math.sqrt(2.0 * p.air_density * p.count * p.area)
    )


def thrust_to_power(f: float, spec: QuadcopterSpec) -> float:
    """Electrical power drawn at thrust f (N)."""
    if f < 0.0:
        raise NegativeThrust(f"thrust must be nonnegative, got {f} N")
    return spec.c_p * f**1.5 + spec.overhead


def power_to_thrust(power: float, spec: QuadcopterSpec) -> float:
    """Thrust produced at electrical power `power` (W); inverse of thrust_to_power."""
    if power < spec.overhead:
        raise InsufficientPower(
            f"power {power} W is below the {spec.overhead} W overhead"
        )
    return ((power - spec.overhead) / spec.c_p) ** (2.0 / 3.0)
