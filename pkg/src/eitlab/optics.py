"""Closed-form optical response of the doubly driven four-level medium.

The probe couples the ground state to the excited state while two classical
control fields couple the excited state to two metastable states.  In the
mean-field steady state the whole linear response is carried by one complex
drive denominator

    F(Delta_p) = (Gamma_A + i Delta_p)
               + Omega_1^2 / (Gamma_1 + i (Delta_p - Delta_1))
               + Omega_2^2 / (Gamma_2 + i (Delta_p - Delta_2)),

through which susceptibility, refractive index and group velocity follow
algebraically:

    chi  = 2 i (g sqrt(N))^2 / (omega F),      n = sqrt(1 + chi),
    v_g  = c / (n_1 + omega dn_1/domega).

The probe detuning convention is Delta_p = omega_ab - omega, so frequency
derivatives map to detuning derivatives with a sign flip, d/domega =
-d/dDelta_p.  Everything here is a pure function of value inputs and safe
to call concurrently.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .params import ControlParams, MediumParams, PhysicalBridge

# Fraction of the control-off resonant absorption below which a point is
# flagged as lying inside a transparency window.
EIT_VALIDITY_FRACTION = 0.01

# Group-velocity denominators smaller than this report a diverged velocity
# (math.inf) instead of a raw division.
DIVERGENCE_FLOOR = 1e-12

DIVERGED = math.inf


@dataclass(frozen=True)
class OpticalResponse:
    """Per-detuning bundle of every derived optical quantity.

    chi_norm is the omega-independent normalization chi * omega / (2 g^2 N)
    = i / F(Delta_p); it carries the curve shapes without fixing the probe
    carrier frequency.  vg_exact and vg_eit are in units of c and may be
    math.inf where the underlying denominator vanishes.
    """

    delta_p: float
    chi: complex
    chi_norm: complex
    n: complex
    dchi_ddelta: complex
    vg_exact: float
    vg_eit: float
    eit_valid: bool


def drive_denominator(m: MediumParams, ctl: ControlParams, delta_p: float) -> complex:
    """F(Delta_p); its real part is always >= gamma_a."""
    return ((m.gamma_a + 1j * delta_p)
            + ctl.omega_1 ** 2 / (m.gamma_1 + 1j * (delta_p - ctl.delta_1))
            + ctl.omega_2 ** 2 / (m.gamma_2 + 1j * (delta_p - ctl.delta_2)))


def drive_denominator_derivative(m: MediumParams, ctl: ControlParams,
                                 delta_p: float) -> complex:
    """dF/dDelta_p."""
    return (1j
            - 1j * ctl.omega_1 ** 2 / (m.gamma_1 + 1j * (delta_p - ctl.delta_1)) ** 2
            - 1j * ctl.omega_2 ** 2 / (m.gamma_2 + 1j * (delta_p - ctl.delta_2)) ** 2)


def susceptibility(m: MediumParams, ctl: ControlParams, delta_p: float) -> complex:
    """Complex susceptibility chi = 2 i (g sqrt(N))^2 / (omega F(Delta_p)).

    The imaginary part (absorption) is strictly positive for any valid
    parameters because Re F >= gamma_a > 0.
    """
    k = 2.0 * m.g_sqrt_n ** 2 / m.omega
    return 1j * k / drive_denominator(m, ctl, delta_p)


def susceptibility_normalized(m: MediumParams, ctl: ControlParams,
                              delta_p: float) -> complex:
    """chi * omega / (2 g^2 N) = i / F(Delta_p), independent of omega and g."""
    return 1j / drive_denominator(m, ctl, delta_p)


def susceptibility_derivative(m: MediumParams, ctl: ControlParams,
                              delta_p: float) -> complex:
    """Analytic dchi/dDelta_p = -chi * (dF/dDelta_p) / F."""
    f = drive_denominator(m, ctl, delta_p)
    chi = 1j * (2.0 * m.g_sqrt_n ** 2 / m.omega) / f
    return -chi * drive_denominator_derivative(m, ctl, delta_p) / f


def bare_peak_absorption(m: MediumParams) -> float:
    """Resonant absorption chi_2(0) with both control fields off: K/gamma_a."""
    return 2.0 * m.g_sqrt_n ** 2 / (m.omega * m.gamma_a)


def refractive_index(chi: complex) -> complex:
    """Principal-branch complex refractive index n = sqrt(1 + chi).

    Physical susceptibilities have Im chi > 0, which keeps 1 + chi off the
    negative real axis and Re n > 0.
    """
    return cmath.sqrt(1.0 + chi)


def _eit_slope_term(m: MediumParams, ctl: ControlParams, delta_p: float) -> complex:
    # (omega/2) * dchi/dDelta_p with the omega factors cancelled exactly:
    # equals -i (g sqrt N)^2 F' / F^2, so downstream group velocities built
    # from it are algebraically omega-free.
    f = drive_denominator(m, ctl, delta_p)
    fp = drive_denominator_derivative(m, ctl, delta_p)
    return -1j * m.g_sqrt_n ** 2 * fp / (f * f)


def group_velocity_eit(m: MediumParams, ctl: ControlParams, delta_p: float) -> float:
    """Transparency-window group velocity c / (1 - (omega/2) dchi_1/dDelta_p).

    Exactly independent of omega.  Reliable only where the medium is
    transparent (see eit_validity); outside that regime the value is still
    returned as-is and may exceed c or be negative.
    """
    den = 1.0 - _eit_slope_term(m, ctl, delta_p).real
    if abs(den) < DIVERGENCE_FLOOR:
        return DIVERGED
    return m.c / den


def group_velocity_exact(m: MediumParams, ctl: ControlParams, delta_p: float) -> float:
    """Group velocity c / (n_1 + omega dn_1/domega) without approximation.

    Uses d/domega = -d/dDelta_p and dn/dDelta_p = (dchi/dDelta_p) / (2 n).
    Can exceed c or turn negative in anomalous-dispersion regions; a
    vanishing denominator reports math.inf.
    """
    chi = susceptibility(m, ctl, delta_p)
    n = cmath.sqrt(1.0 + chi)
    # omega dn_1/domega = -omega dn_1/dDelta_p = -Re[(omega/2) chi' / n]
    den = n.real - (_eit_slope_term(m, ctl, delta_p) / n).real
    if abs(den) < DIVERGENCE_FLOOR:
        return DIVERGED
    return m.c / den


def eit_validity(m: MediumParams, ctl: ControlParams, delta_p: float,
                 chi2: float | None = None) -> bool:
    """True when absorption is below 1% of the control-off resonant peak."""
    if chi2 is None:
        chi2 = susceptibility(m, ctl, delta_p).imag
    return chi2 < EIT_VALIDITY_FRACTION * bare_peak_absorption(m)


def optical_response(m: MediumParams, ctl: ControlParams, delta_p: float) -> OpticalResponse:
    """Evaluate the full response bundle at one probe detuning."""
    f = drive_denominator(m, ctl, delta_p)
    fp = drive_denominator_derivative(m, ctl, delta_p)
    k = 2.0 * m.g_sqrt_n ** 2 / m.omega
    chi = 1j * k / f
    dchi = -chi * fp / f
    n = cmath.sqrt(1.0 + chi)
    slope = -1j * m.g_sqrt_n ** 2 * fp / (f * f)

    den_eit = 1.0 - slope.real
    vg_eit = m.c / den_eit if abs(den_eit) >= DIVERGENCE_FLOOR else DIVERGED
    den_exact = n.real - (slope / n).real
    vg_exact = m.c / den_exact if abs(den_exact) >= DIVERGENCE_FLOOR else DIVERGED

    return OpticalResponse(
        delta_p=delta_p,
        chi=chi,
        chi_norm=1j / f,
        n=n,
        dchi_ddelta=dchi,
        vg_exact=vg_exact,
        vg_eit=vg_eit,
        eit_valid=chi.imag < EIT_VALIDITY_FRACTION * bare_peak_absorption(m),
    )


def coupling_from_physical(b: PhysicalBridge, omega: float) -> float:
    """Single-atom coupling coefficient g = -mu sqrt(omega / (2 V eps_0))."""
    if omega <= 0:
        raise ValueError(f"omega must be > 0, got {omega}")
    return -b.dipole_moment * math.sqrt(omega / (2.0 * b.mode_volume * b.vacuum_permittivity))


def probe_field_amplitude(b: PhysicalBridge, omega: float, mean_photon_amp: complex) -> complex:
    """Mean field amplitude sqrt(omega / (2 V eps_0)) <a> of the probe mode."""
    return math.sqrt(omega / (2.0 * b.mode_volume * b.vacuum_permittivity)) * mean_photon_amp


def polarization_from_excitation(b: PhysicalBridge, mean_a_op: complex) -> complex:
    """Mean polarization mu sqrt(N) <A> / V of the collective excitation."""
    return b.dipole_moment * math.sqrt(b.atom_count) * mean_a_op / b.mode_volume
