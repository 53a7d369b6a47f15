"""Probe-light dispersion laboratory for a doubly driven four-level atomic
ensemble: closed-form susceptibility and group velocity, mean-field
time-domain cross-checks, transparency-window detection, and sweep/ramp
data generation."""

__version__ = "0.1.0"

from .analysis import (
    RampPoint,
    RampSchedule,
    ResponseTable,
    SweepGrid,
    VgCurvePoint,
    Window,
    find_windows,
    storage_ramp,
    sweep_response,
    vg_curve,
)
from .config import ConfigError, RunConfig, emit_config, parse_config
from .dynamics import (
    MeanFieldState,
    StiffnessError,
    Trajectory,
    canonical_bridge,
    drift_matrix,
    evolve,
    evolve_to_steady_state,
    relaxation_horizon,
    slowest_decay_rate,
    steady_state,
    susceptibility_via_dynamics,
)
from .optics import (
    DIVERGED,
    EIT_VALIDITY_FRACTION,
    OpticalResponse,
    bare_peak_absorption,
    coupling_from_physical,
    drive_denominator,
    drive_denominator_derivative,
    eit_validity,
    group_velocity_eit,
    group_velocity_exact,
    optical_response,
    polarization_from_excitation,
    probe_field_amplitude,
    refractive_index,
    susceptibility,
    susceptibility_derivative,
    susceptibility_normalized,
)
from .params import ControlParams, MediumParams, PhysicalBridge
from .presets import PRESETS, preset_config, preset_description, preset_names

__all__ = [
    "__version__",
    "ControlParams", "MediumParams", "PhysicalBridge",
    "OpticalResponse", "DIVERGED", "EIT_VALIDITY_FRACTION",
    "drive_denominator", "drive_denominator_derivative",
    "susceptibility", "susceptibility_normalized", "susceptibility_derivative",
    "bare_peak_absorption", "refractive_index",
    "group_velocity_eit", "group_velocity_exact", "eit_validity",
    "optical_response", "coupling_from_physical", "probe_field_amplitude",
    "polarization_from_excitation",
    "MeanFieldState", "Trajectory", "StiffnessError",
    "drift_matrix", "evolve", "evolve_to_steady_state", "steady_state",
    "relaxation_horizon", "slowest_decay_rate",
    "canonical_bridge", "susceptibility_via_dynamics",
    "SweepGrid", "ResponseTable", "Window", "VgCurvePoint",
    "RampSchedule", "RampPoint",
    "sweep_response", "find_windows", "vg_curve", "storage_ramp",
    "RunConfig", "ConfigError", "parse_config", "emit_config",
    "PRESETS", "preset_names", "preset_config", "preset_description",
]
