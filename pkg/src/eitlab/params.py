"""Parameter containers for the driven four-level atomic medium.

All rates, Rabi frequencies and detunings are expressed in units of the
excited-state decay rate Gamma_A, and the vacuum light speed is fixed to
c = 1 so group velocities come out as fractions of c.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Smallest admissible metastable decay rate.  Values below this would put a
# pole of the control terms onto the real detuning axis; inputs under the
# floor are rejected, never silently clamped.
GAMMA_FLOOR = 1e-12


def _check_finite(errors: list[str], name: str, value: float) -> bool:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        errors.append(f"{name} must be a real number, got {value!r}")
        return False
    if not math.isfinite(value):
        errors.append(f"{name} must be finite, got {value!r}")
        return False
    return True


def medium_param_errors(gamma_a, gamma_1, gamma_2, g_sqrt_n, omega, c) -> list[str]:
    """All invariant violations for a candidate medium, empty if valid."""
    errors: list[str] = []
    if _check_finite(errors, "gamma_a", gamma_a) and gamma_a <= 0:
        errors.append(f"gamma_a must be > 0 (it is the rate unit), got {gamma_a}")
    for name, value in (("gamma_1", gamma_1), ("gamma_2", gamma_2)):
        if _check_finite(errors, name, value) and value < GAMMA_FLOOR:
            errors.append(f"{name} must be >= the floor {GAMMA_FLOOR}, got {value}")
    if _check_finite(errors, "g_sqrt_n", g_sqrt_n) and g_sqrt_n < 0:
        errors.append(f"g_sqrt_n must be >= 0, got {g_sqrt_n}")
    if _check_finite(errors, "omega", omega) and omega <= 0:
        errors.append(f"omega must be > 0, got {omega}")
    if _check_finite(errors, "c", c) and c <= 0:
        errors.append(f"c must be > 0, got {c}")
    return errors


def control_param_errors(omega_1, omega_2, delta_1, delta_2) -> list[str]:
    """All invariant violations for a candidate control-field pair."""
    errors: list[str] = []
    for name, value in (("omega_1", omega_1), ("omega_2", omega_2)):
        if _check_finite(errors, name, value) and value < 0:
            errors.append(f"{name} must be >= 0, got {value}")
    _check_finite(errors, "delta_1", delta_1)
    _check_finite(errors, "delta_2", delta_2)
    return errors


def bridge_param_errors(dipole_moment, mode_volume, vacuum_permittivity,
                        atom_count) -> list[str]:
    errors: list[str] = []
    # dipole_moment = 0 is admitted: it is the decoupled-probe limit and maps
    # to a vanishing coupling coefficient.
    if _check_finite(errors, "dipole_moment", dipole_moment) and dipole_moment < 0:
        errors.append(f"dipole_moment must be >= 0, got {dipole_moment}")
    for name, value in (("mode_volume", mode_volume),
                        ("vacuum_permittivity", vacuum_permittivity),
                        ("atom_count", atom_count)):
        if _check_finite(errors, name, value) and value <= 0:
            errors.append(f"{name} must be > 0, got {value}")
    return errors


@dataclass(frozen=True)
class MediumParams:
    """Atomic and probe-field constants, all in units of gamma_a.

    gamma_a   -- decay rate of the excited state; the global rate unit.
    gamma_1/2 -- coherence decay rates of the two metastable states.
    g_sqrt_n  -- magnitude of the collective coupling g*sqrt(N).
    omega     -- probe carrier frequency.  Only the raw susceptibility
                 depends on it; normalized quantities do not.
    c         -- vacuum light speed, kept at 1.
    """

    gamma_a: float = 1.0
    gamma_1: float = 1e-4
    gamma_2: float = 1e-4
    g_sqrt_n: float = 100.0
    omega: float = 1e6
    c: float = 1.0

    def __post_init__(self):
        errors = medium_param_errors(self.gamma_a, self.gamma_1, self.gamma_2,
                                     self.g_sqrt_n, self.omega, self.c)
        if errors:
            raise ValueError("invalid MediumParams: " + "; ".join(errors))


@dataclass(frozen=True)
class ControlParams:
    """The two classical control fields: Rabi frequencies and detunings."""

    omega_1: float
    omega_2: float
    delta_1: float = 0.0
    delta_2: float = 0.0

    def __post_init__(self):
        errors = control_param_errors(self.omega_1, self.omega_2,
                                      self.delta_1, self.delta_2)
        if errors:
            raise ValueError("invalid ControlParams: " + "; ".join(errors))

    def swapped(self) -> "ControlParams":
        """The same configuration with the two control fields exchanged."""
        return ControlParams(omega_1=self.omega_2, omega_2=self.omega_1,
                             delta_1=self.delta_2, delta_2=self.delta_1)


@dataclass(frozen=True)
class PhysicalBridge:
    """Dimensional constants linking normalized results to physical units.

    All four quantities must be given in one consistent unit system chosen
    by the caller (the package never fixes one).
    """

    dipole_moment: float
    mode_volume: float
    vacuum_permittivity: float
    atom_count: float

    def __post_init__(self):
        errors = bridge_param_errors(self.dipole_moment, self.mode_volume,
                                     self.vacuum_permittivity, self.atom_count)
        if errors:
            raise ValueError("invalid PhysicalBridge: " + "; ".join(errors))
