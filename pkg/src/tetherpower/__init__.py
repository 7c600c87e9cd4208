"""Mechanics, electrics, and design optimization of tether-powered quadcopter chains."""

from .catenary import (
    CatenarySegment,
    ForceVec,
    PlanarPoint,
    arc_length,
    chord_length,
    end_forces,
    evaluate,
    fit_catenary,
)
from .circuit import (
    CircuitProblem,
    CircuitSolution,
    TetherSpec,
    closed_form_single,
    critical_thrust,
    solve_circuit,
    trace_feasible_boundary,
)
from .equilibrium import (
    DEFAULT_GRAVITY,
    ChainConfiguration,
    HoverSolution,
    chain_power,
    chain_thrusts,
)
from .errors import (
    AllInfeasible,
    ConfigError,
    Infeasible,
    InsufficientPower,
    InvalidProblem,
    NegativeThrust,
    NoConvergence,
    OutOfSpan,
    TautTether,
    TetherPowerError,
    VerticalSpan,
)
from .planner import (
    ComparisonReport,
    OneQuadResult,
    ReachProblem,
    TwoQuadResult,
    compare_one_vs_two,
    intermediate_power_grid,
    length_power_curve,
    one_quad_power,
    optimize_one_quad,
    optimize_two_quad,
    sweep_thrust_heatmap,
    two_quad_power,
)
from .powertrain import (
    PropellerParams,
    QuadcopterSpec,
    power_constant,
    power_to_thrust,
    thrust_to_power,
)

__version__ = "0.1.0"
