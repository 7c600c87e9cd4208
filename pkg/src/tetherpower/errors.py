"""Exception types shared across the package."""


class TetherPowerError(Exception):
    """Base class for all errors raised by this package."""


class TautTether(TetherPowerError):
    """Requested cable length does not exceed the straight-line chord."""

    def __init__(self, message: str, segment: int | None = None):
        super().__init__(message)
        self.segment = segment


class VerticalSpan(TetherPowerError):
    """Cable endpoints are (nearly) vertically aligned; no catenary exists."""

    def __init__(self, message: str, segment: int | None = None):
        super().__init__(message)
        self.segment = segment


class NoConvergence(TetherPowerError):
    """A root finder failed to bracket or converge; inputs are pathological."""


class OutOfSpan(TetherPowerError):
    """Horizontal coordinate lies outside a segment's fitted extent."""


class NegativeThrust(TetherPowerError):
    """Thrust magnitudes must be nonnegative."""


class InsufficientPower(TetherPowerError):
    """Electrical power below the constant avionics overhead."""


class Infeasible(TetherPowerError):
    """No physical circuit solution delivers the demanded powers.

    This is a property of the network (source voltage, resistances, loads),
    not a solver artifact: past the critical boundary extra source current
    only grows the resistive losses.
    """


class InvalidProblem(TetherPowerError):
    """Malformed problem data (inconsistent sizes, negative resistance, ...)."""


class AllInfeasible(TetherPowerError):
    """Every candidate sampled by an optimizer was infeasible or taut."""


class ConfigError(TetherPowerError):
    """Configuration file is missing, malformed, or violates the schema."""
