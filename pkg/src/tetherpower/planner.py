"""Reach planning: size the tether and place an intermediate quadcopter.

For a fixed end setpoint the supply power is U-shaped in tether length
(short cables are tense, long cables are heavy), so a coarse grid plus
golden-section refinement finds the one-quadcopter optimum.  Splitting the
same tether across two quadcopters adds an intermediate setpoint and a
length fraction, searched on a grid and polished by coordinate descent.
All searches are derivative-free: the objective jumps to +inf across
taut-cable and electrical-feasibility edges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .catenary import PlanarPoint, chord_length
from .circuit import CircuitProblem, TetherSpec, solve_circuit
from .equilibrium import DEFAULT_GRAVITY, ChainConfiguration, chain_power
from .errors import AllInfeasible, Infeasible, InvalidProblem, TautTether, VerticalSpan
from .parallel import map_ordered
from .powertrain import QuadcopterSpec

LENGTH_GRID_STEP = 0.05        # m, coarse tether-length sampling
LENGTH_START_FACTOR = 1.001    # first sample just above the chord
LENGTH_SPAN_FACTOR = 3.0       # sample lengths up to this multiple of the chord
LENGTH_REFINE_TOL = 1e-3       # m, golden-section stop
FRACTION_STEP = 0.05
COORDINATE_FLOOR = 1e-2        # m, coordinate-descent resolution for y and z
FRACTION_FLOOR = 1e-3
DESCENT_CYCLES = 3

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_ORIGIN = PlanarPoint(0.0, 0.0)


@dataclass(frozen=True)
class ReachProblem:
    """End setpoint (measured from the anchor at the origin) plus hardware."""

    end_setpoint: PlanarPoint
    source_voltage: float
    tether: TetherSpec
    quad: QuadcopterSpec
    gravity: float = DEFAULT_GRAVITY

    def __post_init__(self):
        if self.end_setpoint.y <= 0.0:
            raise InvalidProblem(
                f"end setpoint needs a positive horizontal offset, got "
                f"{self.end_setpoint.y}"
            )
        if self.source_voltage <= 0.0:
            raise InvalidProblem(
                f"source voltage must be positive, got {self.source_voltage}"
            )
        if self.gravity <= 0.0:
            raise InvalidProblem(f"gravity must be positive, got {self.gravity}")

    @property
    def chord(self) -> float:
        return chord_length(_ORIGIN, self.end_setpoint)


@dataclass(frozen=True)
class OneQuadResult:
    optimal_length: float
    min_power: float
    power_curve: tuple[tuple[float, float | None], ...]


@dataclass(frozen=True)
class TwoQuadResult:
    optimal_fraction: float
    optimal_intermediate: PlanarPoint
    min_power: float
    power_grid: tuple[tuple[float, float, float | None, float | None], ...]


@dataclass(frozen=True)
class ComparisonReport:
    one: OneQuadResult
    two: TwoQuadResult
    saving: float  # 1 - P_two / P_one


def one_quad_power(prob: ReachProblem, length: float) -> float:
    """Supply power with a single quadcopter at the end setpoint."""
    cfg = ChainConfiguration(
        anchor=_ORIGIN,
        positions=(prob.end_setpoint,),
        segment_lengths=(length,),
        tether=prob.tether,
        quads=(prob.quad,),
    )
    return chain_power(cfg, prob.source_voltage, prob.gravity).total_power


def two_quad_power(
    prob: ReachProblem,
    total_length: float,
    intermediate: PlanarPoint,
    fraction: float,
) -> float:
    """Supply power with an intermediate quadcopter splitting the tether.

    `fraction` is the share of `total_length` between anchor and the
    intermediate vehicle.
    """
    if not 0.0 < fraction < 1.0:
        raise InvalidProblem(f"fraction must lie strictly in (0, 1), got {fraction}")
    l1 = fraction * total_length
    cfg = ChainConfiguration(
        anchor=_ORIGIN,
        positions=(intermediate, prob.end_setpoint),
        segment_lengths=(l1, total_length - l1),
        tether=prob.tether,
        quads=(prob.quad, prob.quad),
    )
    return chain_power(cfg, prob.source_voltage, prob.gravity).total_power


def _guarded(evaluate) -> float | None:
    """Objective sample, with taut/vertical/infeasible collapsed to None."""
    try:
        return evaluate()
    except (TautTether, VerticalSpan, Infeasible):
        return None


def length_power_curve(
    prob: ReachProblem, workers: int = 1
) -> tuple[tuple[float, float | None], ...]:
    """Coarse supply-power samples over tether length (the one-quad sweep)."""
    start = prob.chord * LENGTH_START_FACTOR
    stop = prob.chord * LENGTH_SPAN_FACTOR
    count = int(math.floor((stop - start) / LENGTH_GRID_STEP)) + 1
    lengths = [start + k * LENGTH_GRID_STEP for k in range(count)]
    powers = map_ordered(
        lambda length: _guarded(lambda: one_quad_power(prob, length)),
        lengths,
        workers,
    )
    return tuple(zip(lengths, powers))


def _golden_section(objective, lo: float, hi: float, tol: float) -> tuple[float, float]:
    """Minimize a unimodal objective on [lo, hi]; ties resolve leftward."""
    x1 = hi - _INV_PHI * (hi - lo)
    x2 = lo + _INV_PHI * (hi - lo)
    f1, f2 = objective(x1), objective(x2)
    while hi - lo > tol:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INV_PHI * (hi - lo)
            f1 = objective(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_PHI * (hi - lo)
            f2 = objective(x2)
    return (x1, f1) if f1 <= f2 else (x2, f2)


def optimize_one_quad(prob: ReachProblem, workers: int = 1) -> OneQuadResult:
    """Tether length minimizing the one-quadcopter supply power.

    Coarse 0.05 m grid over [1.001, 3] chords, then golden-section
    refinement around the best sample down to 1e-3 m.
    """
    curve = length_power_curve(prob, workers)
    best_length, best_power = None, math.inf
    for length, power in curve:
        if power is not None and power < best_power:
            best_length, best_power = length, power
    if best_length is None:
        raise AllInfeasible(
            f"no tether length admits a solution at {prob.source_voltage} V; "
            "raise the source voltage or use a thicker wire"
        )

    def objective(length: float) -> float:
        power = _guarded(lambda: one_quad_power(prob, length))
        return math.inf if power is None else power

    lo = max(prob.chord * LENGTH_START_FACTOR, best_length - LENGTH_GRID_STEP)
    hi = min(prob.chord * LENGTH_SPAN_FACTOR, best_length + LENGTH_GRID_STEP)
    refined_length, refined_power = _golden_section(
        objective, lo, hi, LENGTH_REFINE_TOL
    )
    if refined_power < best_power:
        best_length, best_power = refined_length, refined_power
    return OneQuadResult(
        optimal_length=best_length, min_power=best_power, power_curve=curve
    )


def intermediate_power_grid(
    prob: ReachProblem,
    total_length: float,
    grid_step: float | None = None,
    fraction_step: float = FRACTION_STEP,
    workers: int = 1,
) -> tuple[tuple[float, float, float | None, float | None], ...]:
    """Best-over-fraction supply power on an intermediate-setpoint grid.

    Rows are emitted row-major (y ascending, then z ascending) as
    (y, z, power, fraction); infeasible cells carry None in both slots.
    The search rectangle spans anchor to end setpoint, letting z sag below
    the anchor only when the end setpoint itself is below it.
    """
    end = prob.end_setpoint
    step = end.y / 60.0 if grid_step is None else grid_step
    n_y = max(1, round(end.y / step))
    ys = [end.y * k / n_y for k in range(n_y + 1)]
    z_lo = min(0.0, end.z)
    z_span = end.z - z_lo
    n_z = max(1, round(z_span / step)) if z_span > 0.0 else 0
    zs = [z_lo + z_span * k / n_z for k in range(n_z + 1)] if n_z else [z_lo]
    fractions = [k * fraction_step for k in range(1, round(1.0 / fraction_step))]

    def sweep_row(y: float):
        cells = []
        for z in zs:
            best_power, best_fraction = None, None
            for fraction in fractions:
                power = _guarded(
                    lambda: two_quad_power(
                        prob, total_length, PlanarPoint(y, z), fraction
                    )
                )
                if power is not None and (best_power is None or power < best_power):
                    best_power, best_fraction = power, fraction
            cells.append((y, z, best_power, best_fraction))
        return cells

    rows = map_ordered(sweep_row, ys, workers)
    return tuple(cell for row in rows for cell in row)


def _coordinate_descent(objective, state, lower, upper, steps, floors):
    """Greedy per-coordinate polish with step halving; fully deterministic."""
    best = objective(state)
    state = list(state)
    for _ in range(DESCENT_CYCLES):
        for axis in range(len(state)):
            step = steps[axis]
            while step >= floors[axis]:
                moved = False
                for delta in (step, -step):
                    candidate = min(upper[axis], max(lower[axis], state[axis] + delta))
                    if candidate == state[axis]:
                        continue
                    trial = state.copy()
                    trial[axis] = candidate
                    value = objective(trial)
                    if value < best:
                        state, best = trial, value
                        moved = True
                        break
                if not moved:
                    step *= 0.5
    return state, best


def optimize_two_quad(
    prob: ReachProblem,
    total_length: float,
    grid_step: float | None = None,
    fraction_step: float = FRACTION_STEP,
    workers: int = 1,
) -> TwoQuadResult:
    """Intermediate setpoint and tether fraction minimizing supply power.

    `total_length` is normally the one-quadcopter optimum, so the two
    designs compare at equal tether mass.  Ties during the grid scan break
    toward smaller y, then smaller z, then smaller fraction.
    """
    grid = intermediate_power_grid(
        prob, total_length, grid_step, fraction_step, workers
    )
    best = None
    for y, z, power, fraction in grid:
        if power is not None and (best is None or power < best[0]):
            best = (power, y, z, fraction)
    if best is None:
        raise AllInfeasible(
            "no intermediate setpoint admits a two-quadcopter solution; "
            "raise the source voltage or use a thicker wire"
        )
    power0, y0, z0, fraction0 = best

    def objective(state) -> float:
        y, z, fraction = state
        value = _guarded(
            lambda: two_quad_power(prob, total_length, PlanarPoint(y, z), fraction)
        )
        return math.inf if value is None else value

    end = prob.end_setpoint
    step = end.y / 60.0 if grid_step is None else grid_step
    (y_opt, z_opt, fraction_opt), min_power = _coordinate_descent(
        objective,
        [y0, z0, fraction0],
        lower=[0.0, min(0.0, end.z), 0.01],
        upper=[end.y, end.z, 0.99],
        steps=[step, step, fraction_step],
        floors=[COORDINATE_FLOOR, COORDINATE_FLOOR, FRACTION_FLOOR],
    )
    if power0 < min_power:
        (y_opt, z_opt, fraction_opt), min_power = (y0, z0, fraction0), power0
    return TwoQuadResult(
        optimal_fraction=fraction_opt,
        optimal_intermediate=PlanarPoint(y_opt, z_opt),
        min_power=min_power,
        power_grid=grid,
    )


def compare_one_vs_two(prob: ReachProblem, workers: int = 1) -> ComparisonReport:
    """Optimize both designs at equal total tether length and compare.

    The one-quadcopter optimal length carries over as the two-quadcopter
    total length; `saving` is the relative power reduction of the
    two-quadcopter design (negative when one quadcopter wins).
    """
    one = optimize_one_quad(prob, workers)
    two = optimize_two_quad(prob, one.optimal_length, workers=workers)
    return ComparisonReport(one=one, two=two, saving=1.0 - two.min_power / one.min_power)


def sweep_thrust_heatmap(
    vs: float,
    c_p: float,
    resistances: list[float],
    f_max: list[float],
    resolution: int,
    workers: int = 1,
) -> tuple[tuple[float, float, float | None], ...]:
    """Supply power over a 2-quadcopter thrust grid; None marks infeasible cells.

    Cells come out row-major: the first thrust varies in the outer loop.
    For chains longer than two, the first two quadcopters are swept while
    the rest hold zero thrust.
    """
    n = len(resistances)
    if n < 2 or len(f_max) != n:
        raise InvalidProblem(
            f"heatmap needs >= 2 sections and matching f_max, got {n} and "
            f"{len(f_max)}"
        )
    if resolution < 2:
        raise InvalidProblem(f"resolution must be at least 2, got {resolution}")
    if f_max[0] <= 0.0 or f_max[1] <= 0.0:
        raise InvalidProblem("swept thrust maxima must be positive")
    f1_values = [f_max[0] * k / (resolution - 1) for k in range(resolution)]
    f2_values = [f_max[1] * k / (resolution - 1) for k in range(resolution)]

    def sweep_row(f1: float):
        cells = []
        for f2 in f2_values:
            thrusts = [f1, f2] + [0.0] * (n - 2)
            powers = tuple(c_p * f**1.5 for f in thrusts)
            try:
                solution = solve_circuit(
                    CircuitProblem(
                        source_voltage=vs,
                        resistances=tuple(resistances),
                        powers=powers,
                    )
                )
                cells.append((f1, f2, solution.source_power))
            except Infeasible:
                cells.append((f1, f2, None))
        return cells

    rows = map_ordered(sweep_row, f1_values, workers)
    return tuple(cell for row in rows for cell in row)
