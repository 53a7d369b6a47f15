"""Run configuration: a single JSON document, fully validated up front.

The schema (all blocks optional unless a command needs them):

    {
      "preset": "fig3a",            // expands first; explicit keys override
      "medium":  {"gamma_a": 1.0, "gamma_1": 1e-4, "gamma_2": 1e-4,
                  "g_sqrt_n": 100.0, "omega": 1e6, "c": 1.0},
      "control": {"omega_1": 1.0, "omega_2": 1.0,
                  "delta_1": 0.0, "delta_2": 0.0},
      "grid":    {"axis": "probe_detuning", "start": -5.0, "stop": 5.0,
                  "count": 2001, "scale": "linear"},
      "delta_p": 0.0,
      "threshold_fraction": 0.01,
      "schedule": {"omega_1": [[0.0, 100.0], [1.0, 0.01]],
                   "omega_2": [[0.0, 100.0], [1.0, 0.01]],
                   "delta_p": 0.0, "delta_1": 0.0, "delta_2": 0.0},
      "drive": [1.0, 0.0],          // or a plain number
      "t_end": null,                // null: relaxation-horizon heuristic
      "tol": 1e-9,
      "n_samples": 201
    }

Unknown keys are rejected at every level, and validation reports every
failure at once, not just the first.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .analysis import RampSchedule, SweepGrid, ramp_schedule_errors, sweep_grid_errors
from .params import (
    ControlParams,
    MediumParams,
    control_param_errors,
    medium_param_errors,
)
from .presets import PRESETS, preset_config

_MEDIUM_KEYS = ("gamma_a", "gamma_1", "gamma_2", "g_sqrt_n", "omega", "c")
_CONTROL_KEYS = ("omega_1", "omega_2", "delta_1", "delta_2")
_GRID_KEYS = ("axis", "start", "stop", "count", "scale")
_SCHEDULE_KEYS = ("omega_1", "omega_2", "delta_p", "delta_1", "delta_2")
_TOP_KEYS = ("preset", "medium", "control", "grid", "delta_p",
             "threshold_fraction", "schedule", "drive", "t_end", "tol",
             "n_samples")

_MEDIUM_DEFAULTS = {"gamma_a": 1.0, "gamma_1": 1e-4, "gamma_2": 1e-4,
                    "g_sqrt_n": 100.0, "omega": 1e6, "c": 1.0}
_CONTROL_DEFAULTS = {"delta_1": 0.0, "delta_2": 0.0}


class ConfigError(ValueError):
    """Carries the complete list of validation failures."""

    def __init__(self, errors: list[str]):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


@dataclass(frozen=True)
class RunConfig:
    """Validated parameters of one run; command-specific blocks may be None."""

    medium: MediumParams
    control: ControlParams | None
    grid: SweepGrid | None
    delta_p: float
    threshold_fraction: float
    schedule: RampSchedule | None
    drive: complex
    t_end: float | None
    tol: float
    n_samples: int
    preset: str | None = None


def _is_number(value) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _reject_unknown(errors, block, allowed, path):
    for key in block:
        if key not in allowed:
            errors.append(f"unknown key {path}{key!r}")


def _numbers_only(errors, block, keys, path):
    ok = True
    for key in keys:
        if key in block and not _is_number(block[key]):
            errors.append(f"{path}{key} must be a number, got {block[key]!r}")
            ok = False
    return ok


def _parse_knots(errors, raw, path):
    if not isinstance(raw, list) or not all(
            isinstance(k, list) and len(k) == 2 and all(_is_number(v) for v in k)
            for k in raw):
        errors.append(f"{path} must be a list of [time, value] pairs")
        return None
    return tuple((float(t), float(v)) for t, v in raw)


def _parse_drive(errors, raw):
    if _is_number(raw):
        return complex(float(raw), 0.0)
    if (isinstance(raw, list) and len(raw) == 2
            and all(_is_number(v) for v in raw)):
        return complex(float(raw[0]), float(raw[1]))
    errors.append(f"drive must be a number or a [re, im] pair, got {raw!r}")
    return 1.0 + 0.0j


def _merge_preset(errors, doc):
    name = doc.get("preset")
    if name is None:
        return doc
    if not isinstance(name, str) or name not in PRESETS:
        errors.append(f"unknown preset {name!r}; available: {', '.join(PRESETS)}")
        return doc
    merged = preset_config(name)
    for key, value in doc.items():
        if (isinstance(value, dict) and isinstance(merged.get(key), dict)):
            merged[key] = {**merged[key], **value}
        else:
            merged[key] = value
    return merged


def parse_config(text: str) -> RunConfig:
    """Parse and validate a JSON config document.

    Raises ConfigError listing every syntax, schema and invariant failure.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(
            [f"JSON syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}"]
        ) from exc
    if not isinstance(doc, dict):
        raise ConfigError([f"config must be a JSON object, got {type(doc).__name__}"])

    errors: list[str] = []
    _reject_unknown(errors, doc, _TOP_KEYS, "")
    doc = _merge_preset(errors, doc)

    # medium (defaults applied)
    medium = None
    raw = doc.get("medium", {})
    if not isinstance(raw, dict):
        errors.append(f"medium must be an object, got {raw!r}")
    else:
        _reject_unknown(errors, raw, _MEDIUM_KEYS, "medium.")
        if _numbers_only(errors, raw, _MEDIUM_KEYS, "medium."):
            values = {**_MEDIUM_DEFAULTS,
                      **{k: float(v) for k, v in raw.items() if k in _MEDIUM_KEYS}}
            block_errors = medium_param_errors(**values)
            if block_errors:
                errors.extend("medium: " + e for e in block_errors)
            else:
                medium = MediumParams(**values)

    # control (optional block)
    control = None
    if "control" in doc:
        raw = doc["control"]
        if not isinstance(raw, dict):
            errors.append(f"control must be an object, got {raw!r}")
        else:
            _reject_unknown(errors, raw, _CONTROL_KEYS, "control.")
            missing = [k for k in ("omega_1", "omega_2") if k not in raw]
            for key in missing:
                errors.append(f"control.{key} is required")
            if not missing and _numbers_only(errors, raw, _CONTROL_KEYS, "control."):
                values = {**_CONTROL_DEFAULTS,
                          **{k: float(v) for k, v in raw.items() if k in _CONTROL_KEYS}}
                block_errors = control_param_errors(**values)
                if block_errors:
                    errors.extend("control: " + e for e in block_errors)
                else:
                    control = ControlParams(**values)

    # grid (optional block)
    grid = None
    if "grid" in doc:
        raw = doc["grid"]
        if not isinstance(raw, dict):
            errors.append(f"grid must be an object, got {raw!r}")
        else:
            _reject_unknown(errors, raw, _GRID_KEYS, "grid.")
            values = {"axis": raw.get("axis", "probe_detuning"),
                      "scale": raw.get("scale", "linear"),
                      "start": raw.get("start"), "stop": raw.get("stop"),
                      "count": raw.get("count")}
            missing = [k for k in ("start", "stop", "count") if values[k] is None]
            for key in missing:
                errors.append(f"grid.{key} is required")
            if not missing:
                if _is_number(values["count"]) and float(values["count"]).is_integer():
                    values["count"] = int(values["count"])
                block_errors = sweep_grid_errors(values["start"], values["stop"],
                                                 values["count"], values["axis"],
                                                 values["scale"])
                if block_errors:
                    errors.extend("grid: " + e for e in block_errors)
                else:
                    grid = SweepGrid(start=float(values["start"]),
                                     stop=float(values["stop"]),
                                     count=values["count"], axis=values["axis"],
                                     scale=values["scale"])

    # schedule (optional block)
    schedule = None
    if "schedule" in doc:
        raw = doc["schedule"]
        if not isinstance(raw, dict):
            errors.append(f"schedule must be an object, got {raw!r}")
        else:
            _reject_unknown(errors, raw, _SCHEDULE_KEYS, "schedule.")
            missing = [k for k in ("omega_1", "omega_2") if k not in raw]
            for key in missing:
                errors.append(f"schedule.{key} is required")
            detunings = {}
            for key in ("delta_p", "delta_1", "delta_2"):
                value = raw.get(key, 0.0)
                if not _is_number(value):
                    errors.append(f"schedule.{key} must be a number, got {value!r}")
                    value = 0.0
                detunings[key] = float(value)
            if not missing:
                k1 = _parse_knots(errors, raw["omega_1"], "schedule.omega_1")
                k2 = _parse_knots(errors, raw["omega_2"], "schedule.omega_2")
                if k1 is not None and k2 is not None:
                    block_errors = ramp_schedule_errors(k1, k2, **detunings)
                    if block_errors:
                        errors.extend("schedule: " + e for e in block_errors)
                    else:
                        schedule = RampSchedule(omega_1_knots=k1, omega_2_knots=k2,
                                                **detunings)

    # scalars
    def scalar(key, default, check, message):
        value = doc.get(key, default)
        if value is None and default is None:
            return None
        if not _is_number(value) or not check(value):
            errors.append(f"{key} {message}, got {value!r}")
            return default
        return float(value)

    delta_p = scalar("delta_p", 0.0, math.isfinite, "must be a finite number")
    threshold_fraction = scalar("threshold_fraction", 0.01,
                                lambda v: 0.0 < v < 1.0,
                                "must lie strictly between 0 and 1")
    t_end = scalar("t_end", None, lambda v: v > 0, "must be a positive number")
    tol = scalar("tol", 1e-9, lambda v: 1e-12 <= v <= 1e-3,
                 "must lie in [1e-12, 1e-3]")
    drive = _parse_drive(errors, doc.get("drive", 1.0))
    n_samples = doc.get("n_samples", 201)
    if not isinstance(n_samples, int) or isinstance(n_samples, bool) or n_samples < 2:
        errors.append(f"n_samples must be an integer >= 2, got {n_samples!r}")
        n_samples = 201

    if errors:
        raise ConfigError(errors)

    return RunConfig(medium=medium, control=control, grid=grid,
                     delta_p=delta_p, threshold_fraction=threshold_fraction,
                     schedule=schedule, drive=drive, t_end=t_end, tol=tol,
                     n_samples=n_samples, preset=doc.get("preset"))


def emit_config(cfg: RunConfig) -> str:
    """Serialize a RunConfig so that parse_config reproduces it exactly."""
    doc: dict = {}
    if cfg.preset is not None:
        doc["preset"] = cfg.preset
    doc["medium"] = {k: getattr(cfg.medium, k) for k in _MEDIUM_KEYS}
    if cfg.control is not None:
        doc["control"] = {k: getattr(cfg.control, k) for k in _CONTROL_KEYS}
    if cfg.grid is not None:
        doc["grid"] = {k: getattr(cfg.grid, k) for k in _GRID_KEYS}
    if cfg.schedule is not None:
        doc["schedule"] = {
            "omega_1": [[t, v] for t, v in cfg.schedule.omega_1_knots],
            "omega_2": [[t, v] for t, v in cfg.schedule.omega_2_knots],
            "delta_p": cfg.schedule.delta_p,
            "delta_1": cfg.schedule.delta_1,
            "delta_2": cfg.schedule.delta_2,
        }
    doc["delta_p"] = cfg.delta_p
    doc["threshold_fraction"] = cfg.threshold_fraction
    doc["drive"] = [cfg.drive.real, cfg.drive.imag]
    doc["t_end"] = cfg.t_end
    doc["tol"] = cfg.tol
    doc["n_samples"] = cfg.n_samples
    return json.dumps(doc, indent=2)
