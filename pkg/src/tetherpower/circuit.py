"""DC network solve for quadcopters fed in parallel through one tether.

The chain of tether sections forms a ladder: section k carries the summed
current of every quadcopter at or beyond k, so fixing the electrical power
P_j drawn at each node gives N coupled quadratics in the node currents.
The solver follows the low-current branch, the one continuously connected
to the lossless solution i_j = P_j / V_s; past a critical thrust boundary
no real solution exists at all.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import Infeasible, InvalidProblem
from .parallel import map_ordered

_RESIDUAL_TARGET = 1e-12     # per-watt residual the Newton loop aims for
_RESIDUAL_ACCEPT = 1e-10     # per-watt residual still accepted as converged
_MAX_NEWTON_ITER = 100
_HOMOTOPY_STEPS = 10
_BOUNDARY_TOL = 1e-6         # N; bisection resolution of thrust boundaries


@dataclass(frozen=True)
class TetherSpec:
    """Electrical and mass properties of the cable per unit length."""

    rho: float  # resistance, ohm/m
    lam: float  # mass, kg/m

    def __post_init__(self):
        if self.rho <= 0.0:
            raise ValueError(f"rho must be positive, got {self.rho}")
        if self.lam <= 0.0:
            raise ValueError(f"lam must be positive, got {self.lam}")

    def segment_resistance(self, length: float) -> float:
        return self.rho * length


@dataclass(frozen=True)
class CircuitProblem:
    """Source voltage plus per-section resistances and per-node powers."""

    source_voltage: float
    resistances: tuple[float, ...]
    powers: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "resistances", tuple(self.resistances))
        object.__setattr__(self, "powers", tuple(self.powers))
        if not math.isfinite(self.source_voltage) or self.source_voltage <= 0.0:
            raise InvalidProblem(
                f"source voltage must be positive, got {self.source_voltage}"
            )
        if len(self.resistances) != len(self.powers) or not self.powers:
            raise InvalidProblem(
                f"need equal, nonzero counts of resistances and powers, got "
                f"{len(self.resistances)} and {len(self.powers)}"
            )
        for r in self.resistances:
            if not math.isfinite(r) or r < 0.0:
                raise InvalidProblem(f"resistances must be finite and >= 0, got {r}")
        for p in self.powers:
            if not math.isfinite(p) or p < 0.0:
                raise InvalidProblem(f"powers must be finite and >= 0, got {p}")


@dataclass(frozen=True)
class CircuitSolution:
    """Per-node currents and voltages plus what the source delivers."""

    currents: tuple[float, ...]
    voltages: tuple[float, ...]
    source_current: float
    source_power: float


def _node_drops(resistances, currents):
    """Cumulative resistive voltage drop from the source to each node."""
    n = len(currents)
    suffix = 0.0
    section = [0.0] * n
    for k in range(n - 1, -1, -1):
        suffix += currents[k]
        section[k] = resistances[k] * suffix
    drops = [0.0] * n
    acc = 0.0
    for k in range(n):
        acc += section[k]
        drops[k] = acc
    return drops


def _residual(vs, resistances, powers, currents):
    drops = _node_drops(resistances, currents)
    return [
        currents[j] * (vs - drops[j]) - powers[j]
        for j in range(len(currents))
    ]


def _jacobian(vs, resistances, currents):
    n = len(currents)
    drops = _node_drops(resistances, currents)
    cumres = [0.0] * n
    acc = 0.0
    for k in range(n):
        acc += resistances[k]
        cumres[k] = acc
    jac = [[0.0] * n for _ in range(n)]
    for j in range(n):
        for m in range(n):
            val = -currents[j] * cumres[min(j, m)]
            if j == m:
                val += vs - drops[j]
            jac[j][m] = val
    return jac


def _solve_dense(matrix, rhs):
    """Gaussian elimination with partial pivoting; None if singular."""
    n = len(rhs)
    a = [row[:] for row in matrix]
    b = rhs[:]
    for col in range(n):
        pivot = max(range(col, n), key=lambda r: abs(a[r][col]))
        if abs(a[pivot][col]) < 1e-300:
            return None
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            b[col], b[pivot] = b[pivot], b[col]
        inv = 1.0 / a[col][col]
        for row in range(col + 1, n):
            factor = a[row][col] * inv
            if factor == 0.0:
                continue
            for k in range(col, n):
                a[row][k] -= factor * a[col][k]
            b[row] -= factor * b[col]
    x = [0.0] * n
    for row in range(n - 1, -1, -1):
        s = b[row]
        for k in range(row + 1, n):
            s -= a[row][k] * x[k]
        x[row] = s / a[row][row]
    return x


def _newton(vs, resistances, powers, start):
    """Damped Newton on the ladder residual; None when it fails to converge."""
    scale = max(1.0, max(powers))
    currents = list(start)
    residual = _residual(vs, resistances, powers, currents)
    for _ in range(_MAX_NEWTON_ITER):
        if max(abs(f) for f in residual) <= _RESIDUAL_TARGET * scale:
            break
        step = _solve_dense(_jacobian(vs, resistances, currents),
                            [-f for f in residual])
        if step is None:
            break
        norm0 = sum(f * f for f in residual)
        alpha = 1.0
        while alpha >= 1e-8:
            trial = [i + alpha * s for i, s in zip(currents, step)]
            trial_res = _residual(vs, resistances, powers, trial)
            if sum(f * f for f in trial_res) <= (1.0 - 1e-4 * alpha) * norm0:
                currents, residual = trial, trial_res
                break
            alpha *= 0.5
        else:
            break  # no descent direction left: stalled
    if max(abs(f) for f in residual) <= _RESIDUAL_ACCEPT * scale:
        return currents
    return None


def _solve_currents(vs, resistances, powers):
    """Low-current branch of the ladder equations, or None if unreachable.

    Starts Newton from the lossless solution; on a stall, walks a homotopy
    that scales all resistances up from zero so the iterate stays attached
    to the physical branch.
    """
    lossless = [p / vs for p in powers]
    currents = _newton(vs, resistances, powers, lossless)
    if currents is None:
        currents = lossless
        for step in range(1, _HOMOTOPY_STEPS + 1):
            t = step / _HOMOTOPY_STEPS
            currents = _newton(vs, [t * r for r in resistances], powers, currents)
            if currents is None:
                return None
    drops = _node_drops(resistances, currents)
    for j, i_j in enumerate(currents):
        if i_j < 0.0:
            if i_j < -1e-9 * max(1.0, max(currents)):
                return None  # wandered off the physical branch
            currents[j] = 0.0
        if vs - drops[j] <= 0.0:
            return None
    return currents


def solve_circuit(prob: CircuitProblem) -> CircuitSolution:
    """Solve the parallel-quadcopter DC network for the physical branch.

    Raises Infeasible when the demanded powers exceed what the network can
    deliver through its resistances at the given source voltage.
    """
    vs = prob.source_voltage
    currents = _solve_currents(vs, list(prob.resistances), list(prob.powers))
    if currents is None:
        raise Infeasible(
            f"powers {list(prob.powers)} W are not deliverable through "
            f"resistances {list(prob.resistances)} ohm at {vs} V"
        )
    drops = _node_drops(prob.resistances, currents)
    voltages = tuple(vs - d for d in drops)
    source_current = sum(currents)
    return CircuitSolution(
        currents=tuple(currents),
        voltages=voltages,
        source_current=source_current,
        source_power=vs * source_current,
    )


def closed_form_single(f1: float, r1: float, vs: float, c_p: float) -> float:
    """Source power for one quadcopter, low-current root of the scalar quadratic.

    Evaluated as 2*P/(1 + sqrt(1 - 4*P*R/Vs^2)), which is algebraically the
    minus-branch root but stays exact as R -> 0.
    """
    if r1 <= 0.0:
        raise InvalidProblem(f"closed form needs R > 0, got {r1}")
    if f1 < 0.0 or vs <= 0.0 or c_p <= 0.0:
        raise InvalidProblem("thrust must be >= 0 and voltage, c_p positive")
    power = c_p * f1**1.5
    disc = 1.0 - 4.0 * power * r1 / vs**2
    if disc < -1e-12:
        raise Infeasible(
            f"thrust {f1} N exceeds the critical thrust at {vs} V, {r1} ohm"
        )
    return 2.0 * power / (1.0 + math.sqrt(max(disc, 0.0)))


def critical_thrust(vs: float, c_p: float, r: float) -> float:
    """Largest single-quadcopter thrust with a real supply-power solution."""
    return vs ** (4.0 / 3.0) / ((4.0 * c_p) ** (2.0 / 3.0) * r ** (2.0 / 3.0))


def _thrusts_feasible(vs, c_p, resistances, thrusts):
    powers = [c_p * f**1.5 for f in thrusts]
    for p in powers:
        if not math.isfinite(p):
            raise InvalidProblem(
                "thrust boundary appears unbounded; check for zero resistances"
            )
    return _solve_currents(vs, resistances, powers) is not None


def _ray_directions(n_axes: int, n_rays: int):
    if n_axes == 1:
        return [(1.0,)]
    angles = [0.5 * math.pi * k / (n_rays - 1) for k in range(n_rays)]
    return [(math.cos(t), math.sin(t)) for t in angles]


def trace_feasible_boundary(
    vs: float,
    c_p: float,
    resistances: list[float],
    n_rays: int,
    workers: int = 1,
    tol: float = _BOUNDARY_TOL,
) -> list[tuple[float, ...]]:
    """Supremum feasible thrust along rays through the positive orthant.

    For one quadcopter this is the single critical thrust; for two, rays
    sweep the quarter circle from (1, 0) to (0, 1) and each boundary point
    is located by bisection on circuit solvability to `tol` newtons.
    """
    res = [float(r) for r in resistances]
    n = len(res)
    if n < 1 or n_rays < 2:
        raise InvalidProblem("need at least one section and two rays")
    if n > 2:
        raise InvalidProblem("boundary tracing is implemented for N <= 2")
    if vs <= 0.0 or c_p <= 0.0 or any(r < 0.0 for r in res):
        raise InvalidProblem("voltage and c_p must be positive, resistances >= 0")
    if all(r == 0.0 for r in res):
        raise InvalidProblem("a lossless network has no finite thrust boundary")

    def locate(direction):
        lo, hi = 0.0, 1.0
        for _ in range(200):
            if _thrusts_feasible(vs, c_p, res, [hi * d for d in direction]):
                lo, hi = hi, 2.0 * hi
            else:
                break
        else:
            raise InvalidProblem(
                f"no finite boundary along ray {direction}; "
                "a section with zero resistance leaves it unbounded"
            )
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if _thrusts_feasible(vs, c_p, res, [mid * d for d in direction]):
                lo = mid
            else:
                hi = mid
        scale = 0.5 * (lo + hi)
        return tuple(scale * d for d in direction)

    return map_ordered(locate, _ray_directions(n, n_rays), workers)
