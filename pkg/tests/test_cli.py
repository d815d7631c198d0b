import json

import pytest

from wedgebench import zf
from wedgebench.cli import Report, RunConfig, main, parse_word, run_suite
from wedgebench.errors import ConfigError


class TestParseWord:
    def test_grammar(self):
        word = parse_word("Z(2.0) Z*(1.0)")
        assert word == [zf.annihilator(2.0), zf.creator(1.0)]

    def test_empty(self):
        assert parse_word("") == []

    def test_syntax_error_column(self):
        with pytest.raises(ConfigError) as err:
            parse_word("Z*(abc)")
        assert "column 4" in str(err.value)

    def test_missing_paren(self):
        with pytest.raises(ConfigError) as err:
            parse_word("Z(1.0")
        assert "column" in str(err.value)

    def test_round_trip_through_printer(self):
        word = [zf.annihilator(2.0), zf.creator(1.0), zf.creator(-0.25)]
        assert parse_word("".join(str(g) for g in word)) == word


class TestRunConfig:
    def test_alias_expansion(self):
        cfg = RunConfig(suites=["dispersion"])
        assert cfg.suites == ["kk", "causality"]

    def test_unknown_suite(self):
        with pytest.raises(ConfigError):
            RunConfig(suites=["nonsense"])

    def test_empty_suites(self):
        with pytest.raises(ConfigError):
            RunConfig(suites=[])

    def test_unknown_top_key(self):
        with pytest.raises(ConfigError) as err:
            RunConfig.from_mapping({"suite": "kk", "frobnicate": 1})
        assert "frobnicate" in str(err.value)

    def test_unknown_table_key(self):
        with pytest.raises(ConfigError) as err:
            RunConfig.from_mapping({"suite": "dpi", "dpi": {"m": 1.0, "massive": 2}})
        assert "dpi.massive" in str(err.value)

    def test_tolerance_must_be_positive(self):
        with pytest.raises(ConfigError):
            RunConfig(suites=["kk"], tolerances={"kk.x": -1.0})

    def test_toml_round_trip(self, tmp_path):
        path = tmp_path / "run.toml"
        path.write_text(
            'suite = "causality"\nseed = 11\n[kms]\nvariant = "unruh"\n'
        )
        cfg = RunConfig.from_toml(path)
        assert cfg.suites == ["causality"]
        assert cfg.seed == 11
        assert cfg.params["kms"] == {"variant": "unruh"}


class TestRunSuite:
    def test_report_shape_and_artifacts(self, tmp_path):
        cfg = RunConfig(suites=["causality"], out_dir=str(tmp_path))
        (report,) = run_suite(cfg)
        assert isinstance(report, Report)
        assert report.passed
        payload = json.loads((tmp_path / "report_causality.json").read_text())
        for check in payload["checks"]:
            assert set(check) == {"name", "residual", "tolerance", "pass"}
            assert check["pass"] == (check["residual"] <= check["tolerance"])
        assert payload["config"]["seed"] == 7

    def test_tolerance_override_flips_verdict(self):
        cfg = RunConfig(
            suites=["causality"],
            tolerances={"causality.causal_negative_fraction": 1e-12},
        )
        (report,) = run_suite(cfg)
        flipped = [c for c in report.checks if c["name"] == "causal_negative_fraction"]
        assert not flipped[0]["pass"]

    def test_determinism_excluding_wall_time(self):
        cfg = RunConfig(suites=["causality", "unitarize"], seed=7)
        first = run_suite(cfg)
        second = run_suite(cfg)
        for a, b in zip(first, second):
            da, db = json.loads(a.to_json()), json.loads(b.to_json())
            da.pop("wall_time_s")
            db.pop("wall_time_s")
            assert json.dumps(da, sort_keys=True) == json.dumps(db, sort_keys=True)

    def test_config_echo_reruns_to_same_verdicts(self):
        cfg = RunConfig(suites=["unitarize"], seed=13)
        (report,) = run_suite(cfg)
        echo = report.config
        cfg2 = RunConfig(
            suites=echo["suite"],
            seed=echo["seed"],
            tolerances=echo["tolerances"],
            params=echo["params"],
        )
        (report2,) = run_suite(cfg2)
        assert [c["pass"] for c in report.checks] == [c["pass"] for c in report2.checks]

    def test_dispersion_alias_runs_both_suites(self):
        reports = run_suite(RunConfig(suites=["dispersion"]))
        assert [r.suite for r in reports] == ["kk", "causality"]

    def test_thread_pool_env_var(self, monkeypatch):
        monkeypatch.setenv("WEDGEBENCH_THREADS", "2")
        reports = run_suite(RunConfig(suites=["causality", "unitarize"]))
        assert [r.suite for r in reports] == ["causality", "unitarize"]
        assert all(r.passed for r in reports)

    def test_entropy_artifacts(self, tmp_path):
        cfg = RunConfig(suites=["entropy"], out_dir=str(tmp_path))
        run_suite(cfg)
        lines = (tmp_path / "entropy_points.csv").read_text().splitlines()
        assert lines[0] == "dR,fluctuation"
        assert len(lines) == 10
        fit = json.loads((tmp_path / "entropy_fit.json").read_text())
        assert fit["verdict"] == "LOG_LAW"

    def test_configured_scattering_model_certified(self):
        import numpy as np

        cfg = RunConfig(
            suites=["bootstrap"],
            params={"model": {"model": "cdd-product", "poles": [np.pi / 3]}},
        )
        (report,) = run_suite(cfg)
        assert report.passed
        names = [c["name"] for c in report.checks]
        assert any(n.startswith("cdd(") for n in names)
        assert "configured_model_poles_verified" in names

    def test_bad_model_name_is_usage_error(self, tmp_path):
        cfg_file = tmp_path / "m.toml"
        cfg_file.write_text('suite = "bootstrap"\n[model]\nmodel = "wavelet"\n')
        assert main(["bootstrap", "--config", str(cfg_file)]) == 2


class TestMainExitCodes:
    def test_pass_exit_zero(self, capsys):
        assert main(["causality"]) == 0
        out = capsys.readouterr().out
        assert "causal_negative_fraction" in out and "pass" in out

    def test_negative_control_exit_one(self, capsys):
        assert main(["zf", "--break-s"]) == 1
        assert "FAIL" in capsys.readouterr().out

    def test_no_suite_usage_error(self, capsys):
        assert main([]) == 2

    def test_bad_config_usage_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.toml"
        bad.write_text('suite = "kk"\nwhatever = 1\n')
        assert main(["kk", "--config", str(bad)]) == 2
        assert "whatever" in capsys.readouterr().err

    def test_numeric_error_exit_three(self, monkeypatch, capsys):
        from wedgebench import suites
        from wedgebench.errors import NumericError

        def explode(params, rng):
            raise NumericError("quadrature did not converge")

        monkeypatch.setitem(suites.SUITES, "causality", explode)
        assert main(["causality"]) == 3
        assert "numeric error" in capsys.readouterr().err

    def test_word_front_end(self, capsys):
        assert main(["zf", "--word", "Z(2.0) Z*(1.0)", "--model", "ising"]) == 0
        out = capsys.readouterr().out
        assert "δ(2-1)" in out and "Z*(1)Z(2)" in out
