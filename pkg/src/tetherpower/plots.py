"""Figure rendering for the CLI report paths.

Every function takes already-computed sweep data and writes one PNG next
to the delimited output.  Rendering is file-only (Agg backend), so these
run fine on headless machines.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .catenary import evaluate
from .equilibrium import HoverSolution

_DPI = 150


def _save(fig, path: str | Path) -> None:
    fig.savefig(path, dpi=_DPI, bbox_inches="tight")
    plt.close(fig)


def boundary_figure(points: list[tuple[float, ...]], path: str | Path) -> None:
    """Feasible-thrust frontier for a two-quadcopter chain."""
    f1 = [p[0] for p in points]
    f2 = [p[1] if len(p) > 1 else 0.0 for p in points]
    fig, ax = plt.subplots(figsize=(5, 4))
    ax.plot(f1, f2, "-", color="tab:blue")
    ax.fill_between(f1, 0.0, f2, color="tab:blue", alpha=0.15,
                    label="feasible")
    ax.set_xlabel("quadcopter 1 thrust [N]")
    ax.set_ylabel("quadcopter 2 thrust [N]")
    ax.set_title("Feasible thrust boundary")
    ax.legend(loc="upper right")
    _save(fig, path)


def heatmap_figure(cells, path: str | Path) -> None:
    """Supply power over the thrust grid; infeasible cells stay white."""
    f1_values = sorted({c[0] for c in cells})
    f2_values = sorted({c[1] for c in cells})
    index1 = {v: i for i, v in enumerate(f1_values)}
    index2 = {v: i for i, v in enumerate(f2_values)}
    grid = np.full((len(f2_values), len(f1_values)), np.nan)
    for f1, f2, ps in cells:
        if ps is not None:
            grid[index2[f2], index1[f1]] = ps
    fig, ax = plt.subplots(figsize=(5.5, 4.5))
    mesh = ax.pcolormesh(f1_values, f2_values, np.ma.masked_invalid(grid),
                         shading="nearest", cmap="viridis")
    fig.colorbar(mesh, ax=ax, label="supply power [W]")
    ax.set_xlabel("quadcopter 1 thrust [N]")
    ax.set_ylabel("quadcopter 2 thrust [N]")
    ax.set_title("Supply power vs. thrust pair (white = impossible)")
    _save(fig, path)


def length_sweep_figure(samples, path: str | Path,
                        optimum: tuple[float, float] | None = None) -> None:
    """Supply power vs. tether length for one quadcopter."""
    feasible = [(length, ps) for length, ps in samples if ps is not None]
    fig, ax = plt.subplots(figsize=(5.5, 4))
    if feasible:
        ax.plot(*zip(*feasible), "-", color="tab:blue")
    if optimum is not None:
        ax.plot(*optimum, "o", color="tab:red",
                label=f"optimum {optimum[0]:.2f} m, {optimum[1]:.1f} W")
        ax.legend(loc="upper right")
    ax.set_xlabel("tether length [m]")
    ax.set_ylabel("supply power [W]")
    ax.set_title("One-quadcopter supply power vs. tether length")
    _save(fig, path)


def intermediate_sweep_figure(cells, path: str | Path,
                              reference_power: float | None = None) -> None:
    """Best-over-fraction supply power vs. intermediate setpoint.

    `reference_power` (the optimized one-quadcopter power) is drawn on the
    colorbar for a direct is-it-worth-it reading.
    """
    ys = sorted({c[0] for c in cells})
    zs = sorted({c[1] for c in cells})
    yi = {v: i for i, v in enumerate(ys)}
    zi = {v: i for i, v in enumerate(zs)}
    grid = np.full((len(zs), len(ys)), np.nan)
    for y, z, ps, _fraction in cells:
        if ps is not None:
            grid[zi[z], yi[y]] = ps
    fig, ax = plt.subplots(figsize=(6, 4))
    mesh = ax.pcolormesh(ys, zs, np.ma.masked_invalid(grid),
                         shading="nearest", cmap="viridis")
    colorbar = fig.colorbar(mesh, ax=ax, label="supply power [W]")
    if reference_power is not None:
        colorbar.ax.axhline(reference_power, color="magenta", linewidth=2)
    ax.set_xlabel("intermediate y [m]")
    ax.set_ylabel("intermediate z [m]")
    ax.set_title("Two-quadcopter supply power vs. intermediate setpoint")
    _save(fig, path)


def _draw_chain(ax, solution: HoverSolution, color: str, label: str) -> None:
    for seg in solution.segments:
        ys = np.linspace(seg.y_min, seg.y_max, 200)
        ax.plot(ys, [evaluate(seg, y) for y in ys], "-", color=color)
    ends = [seg.p1 for seg in solution.segments]
    ax.plot([p.y for p in ends], [p.z for p in ends], "o", color=color,
            label=label)


def chain_profile_figure(solutions: dict[str, HoverSolution], path: str | Path) -> None:
    """Side view of one or more hover configurations sharing the anchor."""
    colors = ["tab:blue", "tab:red", "tab:green"]
    fig, ax = plt.subplots(figsize=(6, 4))
    for color, (label, solution) in zip(colors, solutions.items()):
        _draw_chain(ax, solution, color, f"{label} ({solution.total_power:.1f} W)")
    ax.plot([0.0], [0.0], "ks", label="anchor")
    ax.set_xlabel("y [m]")
    ax.set_ylabel("z [m]")
    ax.set_aspect("equal", adjustable="datalim")
    ax.legend(loc="best")
    ax.set_title("Tether profiles at hover")
    _save(fig, path)
