"""Named sweep scenarios.

Each preset bundles the control-field configuration and grid of one
standard scenario: probe-detuning spectra with equal or split control
detunings (fig2a-fig2f, fig3a-fig3d), group velocity against Rabi
frequency or common detuning (fig4a_*, fig4b_*), and the two-photon
resonance velocity curve (fig5).  The medium is the shared default
everywhere: gamma_1 = gamma_2 = 1e-4 and g*sqrt(N) = 100 in units of
gamma_a.
"""

from __future__ import annotations

import copy

_SPECTRUM_GRID = {"axis": "probe_detuning", "start": -5.0, "stop": 5.0,
                  "count": 2001, "scale": "linear"}
# Even point count: the merged-window scenario has a sub-milliunit
# absorption spike exactly at delta_p = 0 that a grid point would resolve;
# the shipped grid samples at +-2.5e-3 on either side of it.
_SPECTRUM_GRID_EVEN = {"axis": "probe_detuning", "start": -5.0, "stop": 5.0,
                       "count": 2000, "scale": "linear"}
_RABI_GRID = {"axis": "rabi_synced", "start": 0.01, "stop": 200.0,
              "count": 200, "scale": "log"}
_DETUNING_GRID = {"axis": "common_detuning", "start": -1.0, "stop": 1.0,
                  "count": 201, "scale": "linear"}

PRESETS: dict[str, dict] = {
    "fig2a": {
        "description": "spectrum, resonant controls, only field 1 on (O1=1, O2=0)",
        "control": {"omega_1": 1.0, "omega_2": 0.0, "delta_1": 0.0, "delta_2": 0.0},
        "grid": dict(_SPECTRUM_GRID),
    },
    "fig2b": {
        "description": "spectrum, resonant controls, only field 2 on (O1=0, O2=1)",
        "control": {"omega_1": 0.0, "omega_2": 1.0, "delta_1": 0.0, "delta_2": 0.0},
        "grid": dict(_SPECTRUM_GRID),
    },
    "fig2c": {
        "description": "spectrum, both controls on resonance with O1=O2=1",
        "control": {"omega_1": 1.0, "omega_2": 1.0, "delta_1": 0.0, "delta_2": 0.0},
        "grid": dict(_SPECTRUM_GRID),
    },
    "fig2d": {
        "description": "spectrum, both controls on resonance with O1=O2=2",
        "control": {"omega_1": 2.0, "omega_2": 2.0, "delta_1": 0.0, "delta_2": 0.0},
        "grid": dict(_SPECTRUM_GRID),
    },
    "fig2e": {
        "description": "spectrum, both controls detuned by +2, O1=O2=1",
        "control": {"omega_1": 1.0, "omega_2": 1.0, "delta_1": 2.0, "delta_2": 2.0},
        "grid": dict(_SPECTRUM_GRID),
    },
    "fig2f": {
        "description": "spectrum, both controls detuned by -2, O1=O2=1",
        "control": {"omega_1": 1.0, "omega_2": 1.0, "delta_1": -2.0, "delta_2": -2.0},
        "grid": dict(_SPECTRUM_GRID),
    },
    "fig3a": {
        "description": "split-detuning spectrum, D1=1, D2=-1, O1=O2=1 (two windows)",
        "control": {"omega_1": 1.0, "omega_2": 1.0, "delta_1": 1.0, "delta_2": -1.0},
        "grid": dict(_SPECTRUM_GRID),
    },
    "fig3b": {
        "description": "split-detuning spectrum, D1=1, D2=-2, O1=2, O2=0.5",
        "control": {"omega_1": 2.0, "omega_2": 0.5, "delta_1": 1.0, "delta_2": -2.0},
        "grid": dict(_SPECTRUM_GRID),
    },
    "fig3c": {
        "description": "split-detuning spectrum, D1=0.5, D2=-0.5, O1=O2=2 (overlapping windows)",
        "control": {"omega_1": 2.0, "omega_2": 2.0, "delta_1": 0.5, "delta_2": -0.5},
        "grid": dict(_SPECTRUM_GRID),
    },
    "fig3d": {
        "description": "split-detuning spectrum, D1=0.05, D2=-0.05, O1=O2=4 (merged window)",
        "control": {"omega_1": 4.0, "omega_2": 4.0, "delta_1": 0.05, "delta_2": -0.05},
        "grid": dict(_SPECTRUM_GRID_EVEN),
    },
    "fig4a_synced": {
        "description": "group velocity vs Rabi frequency, both controls swept together, on resonance",
        "control": {"omega_1": 1.0, "omega_2": 1.0, "delta_1": 0.0, "delta_2": 0.0},
        "grid": dict(_RABI_GRID),
        "delta_p": 0.0,
    },
    "fig4a_fixed": {
        "description": "group velocity vs Rabi frequency of field 1, field 2 fixed at 100, on resonance",
        "control": {"omega_1": 1.0, "omega_2": 100.0, "delta_1": 0.0, "delta_2": 0.0},
        "grid": {"axis": "rabi_1", "start": 0.01, "stop": 200.0,
                 "count": 200, "scale": "log"},
        "delta_p": 0.0,
    },
    "fig4b_strong": {
        "description": "group velocity vs common detuning at three-photon resonance, O1=O2=50",
        "control": {"omega_1": 50.0, "omega_2": 50.0, "delta_1": 0.0, "delta_2": 0.0},
        "grid": dict(_DETUNING_GRID),
    },
    "fig4b_weak": {
        "description": "group velocity vs common detuning at three-photon resonance, O1=O2=0.04",
        "control": {"omega_1": 0.04, "omega_2": 0.04, "delta_1": 0.0, "delta_2": 0.0},
        "grid": dict(_DETUNING_GRID),
    },
    "fig5": {
        "description": "group velocity vs synced Rabi frequency at two-photon resonance, Dp=D1=2, D2=-2",
        "control": {"omega_1": 1.0, "omega_2": 1.0, "delta_1": 2.0, "delta_2": -2.0},
        "grid": dict(_RABI_GRID),
        "delta_p": 2.0,
    },
}


def preset_names() -> list[str]:
    return list(PRESETS)


def preset_config(name: str) -> dict:
    """Config-document fragments of one preset (description stripped)."""
    if name not in PRESETS:
        raise KeyError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")
    doc = copy.deepcopy(PRESETS[name])
    doc.pop("description")
    return doc


def preset_description(name: str) -> str:
    return PRESETS[name]["description"]
