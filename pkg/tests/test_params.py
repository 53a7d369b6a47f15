"""Parameter container validation."""

import math

import pytest

from eitlab import ControlParams, MediumParams, PhysicalBridge


class TestMediumParams:
    def test_defaults(self):
        m = MediumParams()
        assert (m.gamma_a, m.gamma_1, m.gamma_2) == (1.0, 1e-4, 1e-4)
        assert (m.g_sqrt_n, m.omega, m.c) == (100.0, 1e6, 1.0)

    def test_gamma_floor_rejected_not_clamped(self):
        with pytest.raises(ValueError, match="1e-12"):
            MediumParams(gamma_1=0.0)
        with pytest.raises(ValueError, match="gamma_2"):
            MediumParams(gamma_2=1e-13)
        # the floor itself is admissible
        assert MediumParams(gamma_1=1e-12).gamma_1 == 1e-12

    @pytest.mark.parametrize("kwargs", [
        dict(gamma_a=0.0),
        dict(gamma_a=-1.0),
        dict(g_sqrt_n=-1.0),
        dict(omega=0.0),
        dict(c=0.0),
        dict(omega=math.inf),
    ])
    def test_invalid_rejected(self, kwargs):
        with pytest.raises(ValueError):
            MediumParams(**kwargs)

    def test_frozen(self):
        with pytest.raises(AttributeError):
            MediumParams().omega = 2.0


class TestControlParams:
    def test_any_sign_detunings(self):
        ctl = ControlParams(1.0, 0.0, delta_1=-3.0, delta_2=4.5)
        assert ctl.delta_1 == -3.0

    @pytest.mark.parametrize("kwargs", [
        dict(omega_1=-0.1, omega_2=0.0),
        dict(omega_1=0.0, omega_2=-1.0),
        dict(omega_1=math.nan, omega_2=0.0),
        dict(omega_1=1.0, omega_2=1.0, delta_1=math.inf),
    ])
    def test_invalid_rejected(self, kwargs):
        with pytest.raises(ValueError):
            ControlParams(**kwargs)

    def test_swapped(self):
        ctl = ControlParams(1.0, 2.0, 3.0, -4.0)
        assert ctl.swapped() == ControlParams(2.0, 1.0, -4.0, 3.0)


class TestPhysicalBridge:
    def test_zero_dipole_allowed(self):
        assert PhysicalBridge(0.0, 1.0, 1.0, 1.0).dipole_moment == 0.0

    @pytest.mark.parametrize("kwargs", [
        dict(dipole_moment=-1.0, mode_volume=1.0, vacuum_permittivity=1.0, atom_count=1.0),
        dict(dipole_moment=1.0, mode_volume=0.0, vacuum_permittivity=1.0, atom_count=1.0),
        dict(dipole_moment=1.0, mode_volume=1.0, vacuum_permittivity=-1.0, atom_count=1.0),
        dict(dipole_moment=1.0, mode_volume=1.0, vacuum_permittivity=1.0, atom_count=0.0),
    ])
    def test_invalid_rejected(self, kwargs):
        with pytest.raises(ValueError):
            PhysicalBridge(**kwargs)
