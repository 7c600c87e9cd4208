"""Quasi-static hover equilibrium for a chain of tethered quadcopters.

Each cable span between consecutive vehicles hangs as a catenary; every
quadcopter must thrust against its own weight plus the pulls of the spans
attached below and above it.  Thrusts feed the power model and the tether
circuit to give the electrical power the ground supply must source.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .catenary import (
    CatenarySegment,
    PlanarPoint,
    fit_catenary,
    force_on_end,
)
from .circuit import CircuitProblem, CircuitSolution, TetherSpec, solve_circuit
from .errors import TautTether, VerticalSpan
from .powertrain import QuadcopterSpec, thrust_to_power

DEFAULT_GRAVITY = 9.81  # m/s^2


@dataclass(frozen=True)
class ChainConfiguration:
    """Anchor, quadcopter positions, and per-span cable lengths of one chain.

    Quadcopters are indexed outward from the power source; segment i hangs
    between quadcopter i-1 and quadcopter i, with the anchor playing the
    role of quadcopter 0.
    """

    anchor: PlanarPoint
    positions: tuple[PlanarPoint, ...]
    segment_lengths: tuple[float, ...]
    tether: TetherSpec
    quads: tuple[QuadcopterSpec, ...]

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple(self.positions))
        object.__setattr__(self, "segment_lengths", tuple(self.segment_lengths))
        object.__setattr__(self, "quads", tuple(self.quads))
        n = len(self.positions)
        if n == 0:
            raise ValueError("a chain needs at least one quadcopter")
        if len(self.segment_lengths) != n or len(self.quads) != n:
            raise ValueError(
                f"inconsistent chain: {n} positions, "
                f"{len(self.segment_lengths)} lengths, {len(self.quads)} quads"
            )

    @property
    def total_length(self) -> float:
        return sum(self.segment_lengths)


@dataclass(frozen=True)
class HoverSolution:
    """Complete equilibrium of a chain: geometry, thrusts, and electric state."""

    segments: tuple[CatenarySegment, ...]
    thrusts: tuple[float, ...]
    quad_powers: tuple[float, ...]
    circuit: CircuitSolution
    total_power: float


def _fit_segments(cfg: ChainConfiguration) -> tuple[CatenarySegment, ...]:
    points = (cfg.anchor, *cfg.positions)
    segments = []
    for idx, length in enumerate(cfg.segment_lengths):
        try:
            segments.append(fit_catenary(points[idx], points[idx + 1], length))
        except TautTether as err:
            raise TautTether(f"segment {idx + 1}: {err}", segment=idx + 1) from err
        except VerticalSpan as err:
            raise VerticalSpan(f"segment {idx + 1}: {err}", segment=idx + 1) from err
    return tuple(segments)


def chain_thrusts(
    cfg: ChainConfiguration, g: float = DEFAULT_GRAVITY
) -> tuple[tuple[CatenarySegment, ...], tuple[float, ...]]:
    """Fit every span and return the hover thrust each quadcopter needs.

    The thrust vector balances the quadcopter weight and the cable pulls on
    both sides (the last quadcopter has no outgoing span), so its magnitude
    is ``|| (0, m*g) - t_in - t_out ||``.
    """
    segments = _fit_segments(cfg)
    points = (cfg.anchor, *cfg.positions)
    lam = cfg.tether.lam
    n = len(cfg.positions)
    thrusts = []
    for i in range(1, n + 1):
        fy = 0.0
        fz = cfg.quads[i - 1].mass * g
        pull_below = force_on_end(segments[i - 1], points[i], lam, g)
        fy -= pull_below.fy
        fz -= pull_below.fz
        if i < n:
            pull_above = force_on_end(segments[i], points[i], lam, g)
            fy -= pull_above.fy
            fz -= pull_above.fz
        thrusts.append(math.hypot(fy, fz))
    return segments, tuple(thrusts)


def chain_power(
    cfg: ChainConfiguration, vs: float, g: float = DEFAULT_GRAVITY
) -> HoverSolution:
    """Full hover solution of a chain at source voltage vs.

    Propagates TautTether/VerticalSpan from the geometry (tagged with the
    offending segment) and Infeasible from the circuit.
    """
    segments, thrusts = chain_thrusts(cfg, g)
    quad_powers = tuple(
        thrust_to_power(f, quad) for f, quad in zip(thrusts, cfg.quads)
    )
    resistances = tuple(
        cfg.tether.segment_resistance(length) for length in cfg.segment_lengths
    )
    solution = solve_circuit(
        CircuitProblem(
            source_voltage=vs, resistances=resistances, powers=quad_powers
        )
    )
    return HoverSolution(
        segments=segments,
        thrusts=thrusts,
        quad_powers=quad_powers,
        circuit=solution,
        total_power=solution.source_power,
    )
