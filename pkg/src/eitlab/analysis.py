"""Parameter sweeps, transparency-window detection and quasi-static ramps.

Sweeps evaluate the closed-form optics point by point and are
embarrassingly parallel; results are assembled in axis order from
fixed-size chunks so they do not depend on the worker count.  Window
detection is a sequential post-pass over an ordered probe-detuning sweep:
maximal runs below an absorption threshold, with the edges refined by
bisection on the continuous absorption curve.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .optics import (
    OpticalResponse,
    bare_peak_absorption,
    group_velocity_eit,
    group_velocity_exact,
    eit_validity,
    optical_response,
    susceptibility,
    susceptibility_derivative,
)
from .params import ControlParams, MediumParams

AXES = ("probe_detuning", "rabi_1", "rabi_synced", "common_detuning")

# Default window threshold: fraction of the control-off resonant absorption.
WINDOW_THRESHOLD_FRACTION = 0.01

# Probe-detuning resolution of the bisection-refined window edges.
EDGE_RESOLUTION = 1e-6

# Grid points are distributed to workers in chunks of this fixed size, so
# the assembled table is identical for any worker count.
_CHUNK = 256


def sweep_grid_errors(start, stop, count, axis, scale) -> list[str]:
    errors: list[str] = []
    if axis not in AXES:
        errors.append(f"axis must be one of {AXES}, got {axis!r}")
    if scale not in ("linear", "log"):
        errors.append(f"scale must be 'linear' or 'log', got {scale!r}")
    if not isinstance(count, int) or isinstance(count, bool) or count < 1:
        errors.append(f"count must be an integer >= 1, got {count!r}")
        return errors
    for name, value in (("start", start), ("stop", stop)):
        if not isinstance(value, (int, float)) or not math.isfinite(value):
            errors.append(f"{name} must be a finite number, got {value!r}")
            return errors
    if count == 1:
        if start != stop:
            errors.append("a single-point grid requires start == stop")
    elif not start < stop:
        errors.append(f"start must be < stop, got start={start}, stop={stop}")
    if scale == "log" and start <= 0:
        errors.append(f"log-scaled grids require start > 0, got {start}")
    return errors


@dataclass(frozen=True)
class SweepGrid:
    """Uniform 1-D grid over one swept parameter.

    axis selects what the values mean: the probe detuning, the first Rabi
    frequency (second held), both Rabi frequencies together, or a common
    detuning applied to the probe and both controls.  scale='log' spaces
    the points uniformly in log10.
    """

    start: float
    stop: float
    count: int
    axis: str = "probe_detuning"
    scale: str = "linear"

    def __post_init__(self):
        errors = sweep_grid_errors(self.start, self.stop, self.count,
                                   self.axis, self.scale)
        if errors:
            raise ValueError("invalid SweepGrid: " + "; ".join(errors))

    def values(self) -> np.ndarray:
        if self.count == 1:
            return np.array([float(self.start)])
        if self.scale == "log":
            return np.logspace(math.log10(self.start), math.log10(self.stop),
                               self.count)
        return np.linspace(self.start, self.stop, self.count)


@dataclass(frozen=True)
class Window:
    """One detected transparency interval of a probe-detuning sweep."""

    center: float
    left_edge: float
    right_edge: float
    width: float
    min_chi2: float
    slope_chi1_at_center: float


@dataclass(frozen=True)
class ResponseTable:
    """Probe-detuning sweep output: one response per grid point, in order."""

    medium: MediumParams
    control: ControlParams
    grid: SweepGrid
    responses: list[OpticalResponse]

    def __len__(self) -> int:
        return len(self.responses)

    def delta_p(self) -> np.ndarray:
        return np.array([r.delta_p for r in self.responses])

    def chi2(self) -> np.ndarray:
        return np.array([r.chi.imag for r in self.responses])


def _map_chunked(fn, values, max_workers):
    chunks = [values[i:i + _CHUNK] for i in range(0, len(values), _CHUNK)]
    if max_workers is None or max_workers <= 1 or len(chunks) <= 1:
        done = [[fn(v) for v in chunk] for chunk in chunks]
    else:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            done = list(pool.map(lambda chunk: [fn(v) for v in chunk], chunks))
    return [item for chunk in done for item in chunk]


def sweep_response(m: MediumParams, ctl: ControlParams, grid: SweepGrid,
                   max_workers: int | None = None) -> ResponseTable:
    """Evaluate the optical response over a probe-detuning grid."""
    if grid.axis != "probe_detuning":
        raise ValueError(
            f"sweep_response requires a probe_detuning grid, got {grid.axis!r}; "
            f"use vg_curve for Rabi/detuning axes")
    rows = _map_chunked(lambda dp: optical_response(m, ctl, float(dp)),
                        grid.values(), max_workers)
    return ResponseTable(medium=m, control=ctl, grid=grid, responses=rows)


def _bisect_threshold(m, ctl, threshold, lo, hi):
    # chi2(lo) and chi2(hi) straddle the threshold; return the crossing.
    f_lo = susceptibility(m, ctl, lo).imag - threshold
    while hi - lo > EDGE_RESOLUTION:
        mid = 0.5 * (lo + hi)
        f_mid = susceptibility(m, ctl, mid).imag - threshold
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _refine_minimum(m, ctl, lo, hi):
    # Golden-section search for the chi2 minimum inside [lo, hi].
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    x1 = b - inv_phi * (b - a)
    x2 = a + inv_phi * (b - a)
    f1 = susceptibility(m, ctl, x1).imag
    f2 = susceptibility(m, ctl, x2).imag
    while b - a > EDGE_RESOLUTION:
        if f1 < f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - inv_phi * (b - a)
            f1 = susceptibility(m, ctl, x1).imag
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + inv_phi * (b - a)
            f2 = susceptibility(m, ctl, x2).imag
    x = 0.5 * (a + b)
    return x, susceptibility(m, ctl, x).imag


def find_windows(table: ResponseTable,
                 threshold_fraction: float = WINDOW_THRESHOLD_FRACTION) -> list[Window]:
    """Transparency windows of an ordered probe-detuning sweep.

    A window is a maximal contiguous run of grid points whose absorption
    chi2 stays below threshold_fraction times the control-off resonant
    peak.  Edges interior to the grid are refined by bisection on the
    continuous chi2; runs touching the grid boundary keep the boundary as
    their edge.  An empty list is a valid result.
    """
    if not 0.0 < threshold_fraction < 1.0:
        raise ValueError(f"threshold_fraction must lie in (0, 1), got {threshold_fraction}")
    if table.grid.axis != "probe_detuning":
        raise ValueError("find_windows requires a probe_detuning sweep")
    if len(table) < 100:
        raise ValueError(f"window detection needs >= 100 grid points, got {len(table)}")

    m, ctl = table.medium, table.control
    threshold = threshold_fraction * bare_peak_absorption(m)
    dp = table.delta_p()
    chi2 = table.chi2()
    below = chi2 < threshold

    windows: list[Window] = []
    i = 0
    n = len(dp)
    while i < n:
        if not below[i]:
            i += 1
            continue
        j = i
        while j + 1 < n and below[j + 1]:
            j += 1
        left = dp[i] if i == 0 else _bisect_threshold(m, ctl, threshold, dp[i - 1], dp[i])
        right = dp[j] if j == n - 1 else _bisect_threshold(m, ctl, threshold, dp[j], dp[j + 1])
        k = i + int(np.argmin(chi2[i:j + 1]))
        lo = dp[k - 1] if k > i else left
        hi = dp[k + 1] if k < j else right
        center, min_chi2 = _refine_minimum(m, ctl, lo, hi)
        slope = susceptibility_derivative(m, ctl, center).real
        windows.append(Window(center=center, left_edge=left, right_edge=right,
                              width=right - left, min_chi2=min_chi2,
                              slope_chi1_at_center=slope))
        i = j + 1
    return windows


@dataclass(frozen=True)
class VgCurvePoint:
    """One row of a group-velocity curve."""

    axis_value: float
    vg_eit: float
    vg_exact: float
    eit_valid: bool


def vg_curve(m: MediumParams, ctl_template: ControlParams, grid: SweepGrid,
             delta_p: float = 0.0,
             max_workers: int | None = None) -> list[VgCurvePoint]:
    """Group velocities along a Rabi-frequency or common-detuning grid.

    rabi_synced drives both control fields with the axis value, rabi_1
    varies the first while the template fixes the second, and
    common_detuning locks probe and both controls to the axis value
    (three-photon resonance); delta_p applies to the Rabi axes only.
    """
    if grid.axis == "probe_detuning":
        raise ValueError("vg_curve does not sweep the probe detuning; "
                         "use sweep_response")

    def point(v: float) -> VgCurvePoint:
        if grid.axis == "rabi_synced":
            ctl = replace(ctl_template, omega_1=v, omega_2=v)
            dp = delta_p
        elif grid.axis == "rabi_1":
            ctl = replace(ctl_template, omega_1=v)
            dp = delta_p
        else:  # common_detuning
            ctl = replace(ctl_template, delta_1=v, delta_2=v)
            dp = v
        return VgCurvePoint(
            axis_value=v,
            vg_eit=group_velocity_eit(m, ctl, dp),
            vg_exact=group_velocity_exact(m, ctl, dp),
            eit_valid=eit_validity(m, ctl, dp),
        )

    return _map_chunked(lambda v: point(float(v)), grid.values(), max_workers)


def ramp_schedule_errors(omega_1_knots, omega_2_knots, delta_p, delta_1,
                         delta_2) -> list[str]:
    errors: list[str] = []
    for name, knots in (("omega_1_knots", omega_1_knots),
                        ("omega_2_knots", omega_2_knots)):
        if len(knots) < 1:
            errors.append(f"{name} needs at least one (time, value) knot")
            continue
        times = [k[0] for k in knots]
        if any(t2 <= t1 for t1, t2 in zip(times, times[1:])):
            errors.append(f"{name} knot times must be strictly increasing")
        if any(not math.isfinite(t) for t in times):
            errors.append(f"{name} knot times must be finite")
        if any(not math.isfinite(v) or v < 0 for _, v in knots):
            errors.append(f"{name} values must be finite and >= 0")
    for name, value in (("delta_p", delta_p), ("delta_1", delta_1),
                        ("delta_2", delta_2)):
        if not math.isfinite(value):
            errors.append(f"{name} must be finite, got {value!r}")
    return errors


@dataclass(frozen=True)
class RampSchedule:
    """Piecewise-linear control amplitudes Omega_1(t), Omega_2(t).

    Outside the knot span each amplitude holds its end value.  The probe
    and control detunings stay fixed along the ramp.
    """

    omega_1_knots: tuple[tuple[float, float], ...]
    omega_2_knots: tuple[tuple[float, float], ...]
    delta_p: float = 0.0
    delta_1: float = 0.0
    delta_2: float = 0.0

    def __post_init__(self):
        errors = ramp_schedule_errors(self.omega_1_knots, self.omega_2_knots,
                                      self.delta_p, self.delta_1, self.delta_2)
        if errors:
            raise ValueError("invalid RampSchedule: " + "; ".join(errors))

    def span(self) -> tuple[float, float]:
        times = [k[0] for k in self.omega_1_knots] + [k[0] for k in self.omega_2_knots]
        return min(times), max(times)

    def omega_1_at(self, t):
        xs, ys = zip(*self.omega_1_knots)
        return float(np.interp(t, xs, ys))

    def omega_2_at(self, t):
        xs, ys = zip(*self.omega_2_knots)
        return float(np.interp(t, xs, ys))


@dataclass(frozen=True)
class RampPoint:
    """One instant of a quasi-static storage ramp."""

    time: float
    omega_1: float
    omega_2: float
    vg_eit: float


def storage_ramp(m: MediumParams, sched: RampSchedule,
                 delta_p: float | None = None,
                 n_samples: int = 201) -> list[RampPoint]:
    """Pointwise group velocity along a control-amplitude ramp.

    Each instant is evaluated with the static formula at the instantaneous
    Rabi frequencies (quasi-static approximation, no pulse dynamics), so
    reversing a schedule exactly mirrors the velocity trace in time.
    delta_p defaults to the schedule's own value.
    """
    if n_samples < 2:
        raise ValueError(f"n_samples must be >= 2, got {n_samples}")
    dp = sched.delta_p if delta_p is None else delta_p
    t0, t1 = sched.span()
    knot_times = {k[0] for k in sched.omega_1_knots} | {k[0] for k in sched.omega_2_knots}
    times = sorted(set(np.linspace(t0, t1, n_samples).tolist()) | knot_times)

    points = []
    for t in times:
        o1 = sched.omega_1_at(t)
        o2 = sched.omega_2_at(t)
        ctl = ControlParams(omega_1=o1, omega_2=o2,
                            delta_1=sched.delta_1, delta_2=sched.delta_2)
        points.append(RampPoint(time=t, omega_1=o1, omega_2=o2,
                                vg_eit=group_velocity_eit(m, ctl, dp)))
    return points
