"""JSON configuration parsing, validation and round-tripping."""

import json

import pytest

from eitlab import ConfigError, emit_config, parse_config, preset_names


class TestDefaults:
    def test_minimal_config_applies_medium_defaults(self):
        cfg = parse_config('{"control": {"omega_1": 1, "omega_2": 1}}')
        assert cfg.medium.omega == 1e6
        assert cfg.medium.gamma_1 == 1e-4
        assert cfg.medium.gamma_2 == 1e-4
        assert cfg.medium.g_sqrt_n == 100.0
        assert cfg.medium.gamma_a == 1.0
        assert cfg.control.omega_1 == 1.0
        assert cfg.control.delta_1 == 0.0
        assert cfg.drive == 1.0 + 0j
        assert cfg.tol == 1e-9
        assert cfg.threshold_fraction == 0.01
        assert cfg.t_end is None

    def test_empty_config_is_valid_with_no_blocks(self):
        cfg = parse_config("{}")
        assert cfg.control is None and cfg.grid is None and cfg.schedule is None


class TestValidation:
    def test_gamma_floor_rejected_with_bound_named(self):
        with pytest.raises(ConfigError) as err:
            parse_config('{"medium": {"gamma_1": 0}}')
        assert any("gamma_1" in e and "1e-12" in e for e in err.value.errors)

    def test_all_failures_reported_at_once(self):
        doc = json.dumps({
            "medium": {"gamma_1": 0, "omega": -5},
            "control": {"omega_1": -1, "omega_2": 1},
            "tol": 0.5,
            "bogus_key": 1,
        })
        with pytest.raises(ConfigError) as err:
            parse_config(doc)
        text = " | ".join(err.value.errors)
        assert len(err.value.errors) >= 5
        for fragment in ("gamma_1", "omega", "omega_1", "tol", "bogus_key"):
            assert fragment in text

    def test_syntax_error_reports_position(self):
        with pytest.raises(ConfigError) as err:
            parse_config('{"medium": }')
        assert "line 1" in err.value.errors[0]
        assert "column" in err.value.errors[0]

    def test_unknown_nested_key_rejected(self):
        with pytest.raises(ConfigError, match="medium.'nope'"):
            parse_config('{"medium": {"nope": 1}}')

    def test_non_object_document_rejected(self):
        with pytest.raises(ConfigError, match="object"):
            parse_config("[1, 2]")

    def test_bad_drive_rejected(self):
        with pytest.raises(ConfigError, match="drive"):
            parse_config('{"drive": "big"}')

    def test_boolean_count_rejected(self):
        with pytest.raises(ConfigError):
            parse_config('{"grid": {"start": 0, "stop": 1, "count": true}}')

    def test_integral_float_count_accepted(self):
        cfg = parse_config('{"grid": {"start": 0, "stop": 1, "count": 10.0}}')
        assert cfg.grid.count == 10

    def test_schedule_knots_validated(self):
        doc = json.dumps({"schedule": {"omega_1": [[0, 1], [0, 2]],
                                       "omega_2": [[0, -1]]}})
        with pytest.raises(ConfigError) as err:
            parse_config(doc)
        text = " | ".join(err.value.errors)
        assert "strictly increasing" in text and ">= 0" in text


class TestPresets:
    def test_fig3a_expansion(self):
        cfg = parse_config('{"preset": "fig3a"}')
        assert cfg.control.delta_1 == 1.0
        assert cfg.control.delta_2 == -1.0
        assert cfg.control.omega_1 == 1.0
        assert cfg.control.omega_2 == 1.0
        assert cfg.grid.axis == "probe_detuning"
        assert cfg.preset == "fig3a"

    def test_every_preset_parses(self):
        for name in preset_names():
            cfg = parse_config(json.dumps({"preset": name}))
            assert cfg.control is not None and cfg.grid is not None

    def test_explicit_keys_override_preset(self):
        doc = json.dumps({"preset": "fig2c", "medium": {"omega": 1e8},
                          "control": {"omega_1": 3, "omega_2": 3}})
        cfg = parse_config(doc)
        assert cfg.medium.omega == 1e8
        assert cfg.control.omega_1 == 3.0
        assert cfg.grid.count == 2001  # grid still from the preset

    def test_unknown_preset_lists_available(self):
        with pytest.raises(ConfigError) as err:
            parse_config('{"preset": "fig9z"}')
        assert "fig9z" in err.value.errors[0]
        assert "fig2a" in err.value.errors[0]

    def test_expected_preset_names_exist(self):
        expect = {"fig2a", "fig2b", "fig2c", "fig2d", "fig2e", "fig2f",
                  "fig3a", "fig3b", "fig3c", "fig3d",
                  "fig4a_synced", "fig4a_fixed", "fig4b_strong", "fig4b_weak",
                  "fig5"}
        assert set(preset_names()) == expect


class TestRoundTrip:
    def test_full_config_round_trips(self):
        doc = json.dumps({
            "medium": {"gamma_1": 2e-3, "g_sqrt_n": 50.0},
            "control": {"omega_1": 1.5, "omega_2": 0.5, "delta_1": 0.3},
            "grid": {"axis": "rabi_synced", "start": 0.1, "stop": 10.0,
                     "count": 33, "scale": "log"},
            "schedule": {"omega_1": [[0.0, 10.0], [1.0, 0.1]],
                         "omega_2": [[0.0, 10.0], [1.0, 0.1]],
                         "delta_p": 0.2},
            "delta_p": 0.7,
            "threshold_fraction": 0.05,
            "drive": [0.5, -0.25],
            "t_end": 12.5,
            "tol": 1e-8,
            "n_samples": 77,
        })
        cfg = parse_config(doc)
        assert parse_config(emit_config(cfg)) == cfg

    def test_preset_config_round_trips(self):
        cfg = parse_config('{"preset": "fig4b_weak"}')
        assert parse_config(emit_config(cfg)) == cfg
