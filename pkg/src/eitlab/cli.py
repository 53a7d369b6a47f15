"""Command-line entry point.

    eitlab <command> [--config FILE | --preset NAME] [--out FILE] [--format csv|json]

Commands: sweep, windows, vg, evolve, ramp, preset-list.  Exit status is 0
on success, 1 on any validation problem (bad usage, bad config, unknown
preset, unwritable output), and 2 on a numerical abort (integrator
stiffness).  EITLAB_THREADS caps sweep parallelism; outputs are identical
for any thread count.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__
from .analysis import find_windows, storage_ramp, sweep_response, vg_curve
from .config import ConfigError, RunConfig, parse_config
from .dynamics import MeanFieldState, StiffnessError, evolve, relaxation_horizon
from .presets import PRESETS, preset_description, preset_names
from .tableio import OutputTable, format_value, write_table

_DATA_COMMANDS = ("sweep", "windows", "vg", "evolve", "ramp")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; route that through the
    # validation-error path (exit 1) instead.
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="eitlab",
                     description="probe-light dispersion laboratory for a "
                                 "doubly driven four-level atomic ensemble")
    parser.add_argument("--version", action="version", version=f"eitlab {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command")
    descriptions = {
        "sweep": "optical response over a probe-detuning grid",
        "windows": "transparency windows of a probe-detuning sweep",
        "vg": "group velocity along a Rabi-frequency or common-detuning grid",
        "evolve": "time-domain mean-field trajectory under constant drive",
        "ramp": "quasi-static group velocity along a control-amplitude ramp",
    }
    for name in _DATA_COMMANDS:
        cmd = sub.add_parser(name, help=descriptions[name])
        group = cmd.add_mutually_exclusive_group()
        group.add_argument("--config", metavar="FILE",
                           help="JSON run configuration")
        group.add_argument("--preset", metavar="NAME",
                           help="named scenario (see preset-list)")
        cmd.add_argument("--out", metavar="FILE", default="-",
                         help="output path (default: stdout)")
        cmd.add_argument("--format", choices=("csv", "json"), default="csv",
                         help="output format (default: csv)")
    sub.add_parser("preset-list", help="list the named scenarios")
    return parser


def _load_config(args) -> RunConfig:
    if args.config is not None:
        try:
            with open(args.config, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise ConfigError([f"cannot read config file: {exc}"]) from exc
        return parse_config(text)
    if args.preset is not None:
        return parse_config(f'{{"preset": "{args.preset}"}}')
    return parse_config("{}")


def _threads() -> int:
    raw = os.environ.get("EITLAB_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError([f"EITLAB_THREADS must be an integer, got {raw!r}"]) from None
    return max(1, value)


def _require(cfg: RunConfig, command: str, block: str):
    value = getattr(cfg, block)
    if value is None:
        raise ConfigError([f"the {command!r} command requires a {block!r} "
                           f"block in the configuration"])
    return value


def _provenance(cfg: RunConfig, command: str) -> dict[str, str]:
    prov: dict[str, str] = {"tool": f"eitlab {__version__}", "command": command}
    if cfg.preset is not None:
        prov["preset"] = cfg.preset
    for key in ("gamma_a", "gamma_1", "gamma_2", "g_sqrt_n", "omega", "c"):
        prov[f"medium.{key}"] = format_value(getattr(cfg.medium, key))
    if cfg.control is not None:
        for key in ("omega_1", "omega_2", "delta_1", "delta_2"):
            prov[f"control.{key}"] = format_value(getattr(cfg.control, key))
    if cfg.grid is not None:
        prov["grid.axis"] = cfg.grid.axis
        prov["grid.start"] = format_value(cfg.grid.start)
        prov["grid.stop"] = format_value(cfg.grid.stop)
        prov["grid.count"] = str(cfg.grid.count)
        prov["grid.scale"] = cfg.grid.scale
    return prov


def _run_sweep(cfg: RunConfig) -> OutputTable:
    control = _require(cfg, "sweep", "control")
    grid = _require(cfg, "sweep", "grid")
    table = sweep_response(cfg.medium, control, grid, max_workers=_threads())
    rows = [[r.delta_p, r.chi.real, r.chi.imag, r.chi_norm.real, r.chi_norm.imag,
             r.n.real, r.n.imag, r.vg_exact, r.vg_eit, r.eit_valid]
            for r in table.responses]
    return OutputTable(
        columns=["delta_p", "chi1", "chi2", "chi1_norm", "chi2_norm",
                 "n1", "n2", "vg_exact", "vg_eit", "eit_valid"],
        rows=rows, provenance=_provenance(cfg, "sweep"))


def _run_windows(cfg: RunConfig) -> OutputTable:
    control = _require(cfg, "windows", "control")
    grid = _require(cfg, "windows", "grid")
    table = sweep_response(cfg.medium, control, grid, max_workers=_threads())
    windows = find_windows(table, cfg.threshold_fraction)
    prov = _provenance(cfg, "windows")
    prov["threshold_fraction"] = format_value(cfg.threshold_fraction)
    rows = [[w.center, w.left_edge, w.right_edge, w.width, w.min_chi2,
             w.slope_chi1_at_center] for w in windows]
    return OutputTable(
        columns=["center", "left_edge", "right_edge", "width", "min_chi2",
                 "slope_chi1_at_center"],
        rows=rows, provenance=prov)


def _run_vg(cfg: RunConfig) -> OutputTable:
    control = _require(cfg, "vg", "control")
    grid = _require(cfg, "vg", "grid")
    points = vg_curve(cfg.medium, control, grid, delta_p=cfg.delta_p,
                      max_workers=_threads())
    prov = _provenance(cfg, "vg")
    prov["delta_p"] = format_value(cfg.delta_p)
    rows = [[p.axis_value, p.vg_eit, p.vg_exact, p.eit_valid] for p in points]
    return OutputTable(columns=["axis_value", "vg_eit", "vg_exact", "eit_valid"],
                       rows=rows, provenance=prov)


def _run_evolve(cfg: RunConfig) -> OutputTable:
    control = _require(cfg, "evolve", "control")
    t_end = cfg.t_end
    if t_end is None:
        t_end = relaxation_horizon(cfg.medium, control, cfg.delta_p)
    traj = evolve(MeanFieldState.zero(cfg.drive), cfg.medium, control,
                  cfg.delta_p, t_end, cfg.tol)
    prov = _provenance(cfg, "evolve")
    prov["delta_p"] = format_value(cfg.delta_p)
    prov["drive"] = f"{format_value(cfg.drive.real)}+{format_value(cfg.drive.imag)}j"
    prov["t_end"] = format_value(t_end)
    prov["tol"] = format_value(cfg.tol)
    prov["steps"] = str(traj.step_count)
    rows = [[float(t), a.real, a.imag, c1.real, c1.imag, c2.real, c2.imag]
            for t, (a, c1, c2) in zip(traj.times, traj.values)]
    return OutputTable(
        columns=["t", "re_a", "im_a", "re_c1", "im_c1", "re_c2", "im_c2"],
        rows=rows, provenance=prov)


def _run_ramp(cfg: RunConfig) -> OutputTable:
    schedule = _require(cfg, "ramp", "schedule")
    points = storage_ramp(cfg.medium, schedule, n_samples=cfg.n_samples)
    prov = _provenance(cfg, "ramp")
    prov["schedule.delta_p"] = format_value(schedule.delta_p)
    prov["schedule.delta_1"] = format_value(schedule.delta_1)
    prov["schedule.delta_2"] = format_value(schedule.delta_2)
    prov["schedule.omega_1"] = ";".join(f"{t},{v}" for t, v in schedule.omega_1_knots)
    prov["schedule.omega_2"] = ";".join(f"{t},{v}" for t, v in schedule.omega_2_knots)
    prov["n_samples"] = str(cfg.n_samples)
    rows = [[p.time, p.omega_1, p.omega_2, p.vg_eit] for p in points]
    return OutputTable(columns=["t", "omega_1", "omega_2", "vg_eit"],
                       rows=rows, provenance=prov)


_RUNNERS = {"sweep": _run_sweep, "windows": _run_windows, "vg": _run_vg,
            "evolve": _run_evolve, "ramp": _run_ramp}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required "
                             f"(choose from {', '.join(_DATA_COMMANDS)}, preset-list)")
        if args.command == "preset-list":
            width = max(len(name) for name in preset_names())
            for name in preset_names():
                print(f"{name:<{width}}  {preset_description(name)}")
            return 0
        cfg = _load_config(args)
        table = _RUNNERS[args.command](cfg)
        write_table(table, args.out, args.format)
        return 0
    except UsageError as exc:
        print(f"eitlab: {exc}", file=sys.stderr)
        return 1
    except ConfigError as exc:
        for error in exc.errors:
            print(f"eitlab: config error: {error}", file=sys.stderr)
        return 1
    except (ValueError, KeyError) as exc:
        print(f"eitlab: invalid input: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"eitlab: i/o error: {exc}", file=sys.stderr)
        return 1
    except StiffnessError as exc:
        print(f"eitlab: numerical abort: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
