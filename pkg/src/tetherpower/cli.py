"""Command-line front end.

Subcommands: solve-circuit, boundary, sweep, optimize.  All numeric inputs
are SI.  Results go to stdout (JSON or a short fixed-format report) and to
CSV files; `--plot` renders a PNG next to each CSV.  Output is fully
deterministic: identical inputs give byte-identical files.

Exit codes: 0 success, 1 internal error, 2 malformed config or usage,
3 electrically infeasible.  Failures emit one single-line JSON record on
stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import plots, reports
from .catenary import PlanarPoint
from .circuit import CircuitProblem, solve_circuit, trace_feasible_boundary
from .config import RunConfig, load_config
from .equilibrium import ChainConfiguration, chain_power
from .errors import AllInfeasible, ConfigError, Infeasible, TetherPowerError
from .planner import (
    ReachProblem,
    intermediate_power_grid,
    length_power_curve,
    optimize_one_quad,
    optimize_two_quad,
    sweep_thrust_heatmap,
)
from .powertrain import thrust_to_power

_EXIT_OK = 0
_EXIT_INTERNAL = 1
_EXIT_CONFIG = 2
_EXIT_INFEASIBLE = 3


def _float_list(text: str) -> list[float]:
    try:
        values = [float(part) for part in text.split(",") if part != ""]
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"not a comma-separated float list: {text!r}") from err
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _point(text: str) -> PlanarPoint:
    values = _float_list(text)
    if len(values) != 2:
        raise argparse.ArgumentTypeError(f"expected 'y,z', got {text!r}")
    return PlanarPoint(values[0], values[1])


def _emit_error(kind: str, err: Exception) -> None:
    record = {"error": kind, "type": type(err).__name__, "message": str(err)}
    print(json.dumps(record, sort_keys=True), file=sys.stderr)


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _figure_path(out: str) -> Path:
    return Path(out).with_suffix(".png")


def _reach_problem(config: RunConfig, setpoint: PlanarPoint) -> ReachProblem:
    return ReachProblem(
        end_setpoint=setpoint,
        source_voltage=config.source_voltage,
        tether=config.tether,
        quad=config.quadcopter,
        gravity=config.gravity,
    )


def _cmd_solve_circuit(config: RunConfig, args) -> int:
    if len(args.thrusts) != len(args.lengths):
        raise ConfigError(
            f"{len(args.thrusts)} thrusts but {len(args.lengths)} segment lengths"
        )
    resistances = tuple(config.tether.segment_resistance(l) for l in args.lengths)
    powers = tuple(thrust_to_power(f, config.quadcopter) for f in args.thrusts)
    solution = solve_circuit(
        CircuitProblem(
            source_voltage=config.source_voltage,
            resistances=resistances,
            powers=powers,
        )
    )
    _print_json({
        "feasible": True,
        "thrusts_n": list(args.thrusts),
        "segment_lengths_m": list(args.lengths),
        "resistances_ohm": list(resistances),
        "quad_powers_w": list(powers),
        "currents_a": list(solution.currents),
        "voltages_v": list(solution.voltages),
        "source_current_a": solution.source_current,
        "source_power_w": solution.source_power,
    })
    return _EXIT_OK


def _cmd_boundary(config: RunConfig, args) -> int:
    resistances = [config.tether.segment_resistance(l) for l in args.lengths]
    points = trace_feasible_boundary(
        config.source_voltage,
        config.quadcopter.c_p,
        resistances,
        args.rays,
        workers=args.workers,
    )
    header, rows = reports.boundary_rows(points)
    reports.write_csv(args.out, header, rows)
    if args.plot:
        plots.boundary_figure(points, _figure_path(args.out))
    _print_json({
        "out": args.out,
        "rays": len(points),
        "resistances_ohm": resistances,
        "source_voltage_v": config.source_voltage,
    })
    return _EXIT_OK


def _cmd_sweep(config: RunConfig, args) -> int:
    summary: dict = {"kind": args.kind, "out": args.out}
    if args.kind == "heatmap":
        if args.lengths is None or args.fmax is None:
            raise ConfigError("heatmap sweep needs --lengths and --fmax")
        resistances = [config.tether.segment_resistance(l) for l in args.lengths]
        cells = sweep_thrust_heatmap(
            config.source_voltage,
            config.quadcopter.c_p,
            resistances,
            args.fmax,
            args.resolution,
            workers=args.workers,
        )
        header, rows = reports.heatmap_rows(cells)
        reports.write_csv(args.out, header, rows)
        if args.plot:
            plots.heatmap_figure(cells, _figure_path(args.out))
        summary["cells"] = len(cells)
        summary["infeasible_cells"] = sum(1 for c in cells if c[2] is None)
    elif args.kind == "length":
        if args.setpoint is None:
            raise ConfigError("length sweep needs --setpoint")
        prob = _reach_problem(config, args.setpoint)
        curve = length_power_curve(prob, workers=args.workers)
        header, rows = reports.length_sweep_rows(curve)
        reports.write_csv(args.out, header, rows)
        if args.plot:
            plots.length_sweep_figure(curve, _figure_path(args.out))
        summary["samples"] = len(curve)
    else:  # intermediate
        if args.setpoint is None:
            raise ConfigError("intermediate sweep needs --setpoint")
        prob = _reach_problem(config, args.setpoint)
        reference = None
        if args.total_length is None:
            one = optimize_one_quad(prob, workers=args.workers)
            total_length, reference = one.optimal_length, one.min_power
        else:
            total_length = args.total_length
            try:
                reference = optimize_one_quad(prob, workers=args.workers).min_power
            except AllInfeasible:
                reference = None
        grid = intermediate_power_grid(prob, total_length, workers=args.workers)
        header, rows = reports.intermediate_sweep_rows(grid)
        reports.write_csv(args.out, header, rows)
        if args.plot:
            plots.intermediate_sweep_figure(grid, _figure_path(args.out), reference)
        summary["total_length_m"] = total_length
        summary["one_quad_reference_ps_w"] = reference
        summary["cells"] = len(grid)
    _print_json(summary)
    return _EXIT_OK


def _hover_solution(prob: ReachProblem, positions, lengths):
    cfg = ChainConfiguration(
        anchor=PlanarPoint(0.0, 0.0),
        positions=tuple(positions),
        segment_lengths=tuple(lengths),
        tether=prob.tether,
        quads=(prob.quad,) * len(positions),
    )
    return chain_power(cfg, prob.source_voltage, prob.gravity)


def _cmd_optimize(config: RunConfig, args) -> int:
    prob = _reach_problem(config, args.setpoint)
    outdir = Path(args.out) if args.out else None
    if outdir is not None:
        outdir.mkdir(parents=True, exist_ok=True)
    report: dict = {
        "mode": args.mode,
        "setpoint_m": [prob.end_setpoint.y, prob.end_setpoint.z],
        "source_voltage_v": prob.source_voltage,
    }
    one = two = None
    if args.mode in ("one", "compare"):
        one = optimize_one_quad(prob, workers=args.workers)
        report["one_quad"] = {
            "optimal_length_m": one.optimal_length,
            "min_power_w": one.min_power,
        }
        print(f"one quadcopter: optimal tether length {one.optimal_length:.3f} m, "
              f"min supply power {one.min_power:.1f} W")
    if args.mode in ("two", "compare"):
        if args.total_length is not None:
            total_length = args.total_length
        elif one is not None:
            total_length = one.optimal_length
        else:
            total_length = optimize_one_quad(prob, workers=args.workers).optimal_length
        two = optimize_two_quad(prob, total_length, workers=args.workers)
        report["two_quad"] = {
            "total_length_m": total_length,
            "optimal_fraction": two.optimal_fraction,
            "optimal_intermediate_m": [two.optimal_intermediate.y,
                                       two.optimal_intermediate.z],
            "min_power_w": two.min_power,
        }
        print(f"two quadcopters: total length {total_length:.3f} m, "
              f"fraction {two.optimal_fraction:.3f}, intermediate "
              f"({two.optimal_intermediate.y:.2f}, {two.optimal_intermediate.z:.2f}) m, "
              f"min supply power {two.min_power:.1f} W")
    if args.mode == "compare":
        saving = 1.0 - two.min_power / one.min_power
        report["saving"] = saving
        print(f"two-vs-one saving: {100.0 * saving:.1f}%")

    if outdir is not None:
        with open(outdir / "report.json", "w") as handle:
            json.dump(report, handle, indent=2, sort_keys=True)
            handle.write("\n")
        if one is not None:
            header, rows = reports.length_sweep_rows(one.power_curve)
            reports.write_csv(outdir / "length_sweep.csv", header, rows)
        if two is not None:
            header, rows = reports.intermediate_sweep_rows(two.power_grid)
            reports.write_csv(outdir / "intermediate_sweep.csv", header, rows)
        if args.plot:
            profiles = {}
            if one is not None:
                plots.length_sweep_figure(
                    one.power_curve, outdir / "length_sweep.png",
                    optimum=(one.optimal_length, one.min_power),
                )
                profiles["one quadcopter"] = _hover_solution(
                    prob, [prob.end_setpoint], [one.optimal_length]
                )
            if two is not None:
                reference = one.min_power if one is not None else None
                plots.intermediate_sweep_figure(
                    two.power_grid, outdir / "intermediate_sweep.png", reference
                )
                l1 = two.optimal_fraction * report["two_quad"]["total_length_m"]
                l2 = report["two_quad"]["total_length_m"] - l1
                profiles["two quadcopters"] = _hover_solution(
                    prob, [two.optimal_intermediate, prob.end_setpoint], [l1, l2]
                )
            plots.chain_profile_figure(profiles, outdir / "profiles.png")
    return _EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tetherpower",
        description="Power analysis and design optimization for quadcopter "
                    "chains fed through a single powered tether.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_out: bool):
        p.add_argument("--config", required=True, help="JSON run configuration")
        p.add_argument("--workers", type=int, default=1,
                       help="worker threads for independent samples (output is "
                            "identical for any count)")
        p.add_argument("--seedless", action="store_true",
                       help="no-op; every command is already deterministic")
        if needs_out:
            p.add_argument("--out", required=True, help="output CSV path")
            p.add_argument("--plot", action="store_true",
                           help="also render a PNG figure next to the CSV")

    p = sub.add_parser("solve-circuit",
                       help="solve the tether network for given thrusts")
    add_common(p, needs_out=False)
    p.add_argument("--lengths", type=_float_list, required=True,
                   metavar="L1,L2,...", help="tether segment lengths in m")
    p.add_argument("--thrusts", type=_float_list, required=True,
                   metavar="F1,F2,...", help="per-quadcopter thrusts in N")
    p.set_defaults(handler=_cmd_solve_circuit)

    p = sub.add_parser("boundary",
                       help="trace the feasible thrust boundary")
    add_common(p, needs_out=True)
    p.add_argument("--lengths", type=_float_list, required=True,
                   metavar="L1,L2,...", help="tether segment lengths in m")
    p.add_argument("--rays", type=int, default=41,
                   help="boundary rays across the positive thrust quadrant")
    p.set_defaults(handler=_cmd_boundary)

    p = sub.add_parser("sweep", help="grid sweeps for heatmaps and curves")
    add_common(p, needs_out=True)
    p.add_argument("--kind", choices=("heatmap", "length", "intermediate"),
                   required=True)
    p.add_argument("--lengths", type=_float_list, metavar="L1,L2,...",
                   help="tether segment lengths in m (heatmap)")
    p.add_argument("--fmax", type=_float_list, metavar="F1,F2,...",
                   help="thrust axis maxima in N (heatmap)")
    p.add_argument("--resolution", type=int, default=60,
                   help="grid points per thrust axis (heatmap)")
    p.add_argument("--setpoint", type=_point, metavar="Y,Z",
                   help="end setpoint in m (length/intermediate)")
    p.add_argument("--total-length", type=float, default=None,
                   help="total tether length in m (intermediate; default: "
                        "one-quadcopter optimum)")
    p.set_defaults(handler=_cmd_sweep)

    p = sub.add_parser("optimize",
                       help="optimize tether length and intermediate setpoint")
    add_common(p, needs_out=False)
    p.add_argument("--mode", choices=("one", "two", "compare"), required=True)
    p.add_argument("--setpoint", type=_point, required=True, metavar="Y,Z")
    p.add_argument("--total-length", type=float, default=None,
                   help="two-quadcopter total tether length in m (default: "
                        "one-quadcopter optimum)")
    p.add_argument("--out", default=None,
                   help="directory for report.json and CSV curves")
    p.add_argument("--plot", action="store_true",
                   help="render PNG figures into --out")
    p.set_defaults(handler=_cmd_optimize)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "plot", False) and getattr(args, "out", None) is None:
        _emit_error("config", ConfigError("--plot requires --out"))
        return _EXIT_CONFIG
    try:
        config = load_config(args.config)
        return args.handler(config, args)
    except ConfigError as err:
        _emit_error("config", err)
        return _EXIT_CONFIG
    except (Infeasible, AllInfeasible) as err:
        _emit_error("infeasible", err)
        return _EXIT_INFEASIBLE
    except TetherPowerError as err:
        _emit_error("internal", err)
        return _EXIT_INTERNAL


def entrypoint() -> None:
    sys.exit(main())
