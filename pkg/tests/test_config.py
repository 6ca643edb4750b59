import json

import pytest
from pydantic import ValidationError

from app.cli.main import cli
from config.manager import ConfigManager
from config.schema import GeneratorSpec, OracleLimits, RunConfig, validate_limits


@pytest.fixture
def manager(tmp_path):
    return ConfigManager(str(tmp_path / "config"))


def _write_config(manager, limits, version="1.0.0"):
    manager.config_dir.mkdir(parents=True, exist_ok=True)
    manager.config_file.write_text(json.dumps({"version": version, "limits": limits}))
    return ConfigManager(str(manager.config_dir))


class TestConfigManager:
    def test_defaults(self, manager):
        limits, sources = manager.resolve()
        assert limits == OracleLimits()
        assert set(sources.values()) == {"default"}
        assert not manager.config_dir.exists()

    def test_file_layer(self, manager):
        manager = _write_config(manager, {"max_pw_vertices": 12})
        limits, sources = manager.resolve()
        assert limits.max_pw_vertices == 12
        assert sources["max_pw_vertices"] == "file"
        assert sources["max_lpw_vertices"] == "default"

    def test_env_overrides_file(self, manager, monkeypatch):
        manager = _write_config(manager, {"max_pw_vertices": 12, "max_lpw_vertices": 5})
        monkeypatch.setenv("LAYERED_DECOMP_LIMITS", '{"max_pw_vertices": 10}')
        limits, sources = manager.resolve()
        assert (limits.max_pw_vertices, sources["max_pw_vertices"]) == (10, "env")
        assert (limits.max_lpw_vertices, sources["max_lpw_vertices"]) == (5, "file")

    def test_flags_override_everything(self, manager, monkeypatch):
        monkeypatch.setenv("LAYERED_DECOMP_LIMITS", '{"max_minor_host": 9}')
        limits, sources = manager.resolve({"max_minor_host": 11, "max_pw_vertices": None})
        assert (limits.max_minor_host, sources["max_minor_host"]) == (11, "flag")
        assert sources["max_pw_vertices"] == "default"

    def test_invalid_value(self, manager):
        manager = _write_config(manager, {"max_pw_vertices": 0})
        with pytest.raises(ValidationError):
            manager.resolve()

    def test_unknown_limit(self, manager):
        manager = _write_config(manager, {"max_treewidth": 3})
        with pytest.raises(ValidationError):
            manager.limits()

    def test_malformed_file_falls_back_to_defaults(self, manager, caplog):
        manager.config_dir.mkdir(parents=True)
        manager.config_file.write_text("{not json")
        reloaded = ConfigManager(str(manager.config_dir))
        assert reloaded.config == reloaded.default_config
        assert "Failed to load configuration" in caplog.text

    def test_old_version_keeps_limits(self, manager):
        manager = _write_config(manager, {"max_lpw_vertices": 6}, version="0.9.0")
        assert manager.config["version"] == "1.0.0"
        assert manager.limits().max_lpw_vertices == 6

    def test_init_and_reset(self, manager):
        assert manager.init_config()
        assert not manager.init_config()
        assert manager.init_config(force=True)
        saved = json.loads(manager.config_file.read_text())
        assert saved == {"version": "1.0.0", "limits": OracleLimits().model_dump()}
        manager = _write_config(manager, {"max_pw_vertices": 3})
        manager.reset_config()
        assert manager.limits().max_pw_vertices == 18

    def test_show_rows(self, manager):
        rows = manager.show_rows()
        assert rows[0] == ("max_pw_vertices", "18", "default")
        assert len(rows) == 4


class TestSchema:
    def test_generator_spec_resolves_aliases(self):
        assert GeneratorSpec(family="q_graph", params=(2,)).family == "qk"

    def test_generator_spec_arity(self):
        with pytest.raises(ValidationError, match="takes 2 parameter"):
            GeneratorSpec(family="grid", params=(3,))

    def test_run_config_needs_one_input(self, tmp_path):
        with pytest.raises(ValidationError, match="Exactly one"):
            RunConfig(command="decompose")

    def test_run_config_seed(self):
        with pytest.raises(ValidationError, match="--seed is required"):
            RunConfig(command="gen", generator=GeneratorSpec(family="sp", params=(10,)))

    def test_run_config_negative_root(self, tmp_path):
        with pytest.raises(ValidationError):
            RunConfig(command="decompose", input_path=tmp_path / "g.txt", root=-1)

    def test_validate_limits(self):
        assert validate_limits({"max_pw_vertices": 5}) is None
        assert "max_pw_vertices" in validate_limits({"max_pw_vertices": -5})


class TestConfigCommands:
    def test_show_json(self, runner, tmp_path, monkeypatch):
        monkeypatch.setenv("LAYERED_DECOMP_LIMITS", '{"max_lpw_vertices": 6}')
        result = runner.invoke(
            cli, ["--config-dir", str(tmp_path), "config", "show", "--json"]
        )
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["max_lpw_vertices"] == {"value": 6, "source": "env"}
        assert data["max_pw_vertices"] == {"value": 18, "source": "default"}

    def test_show_table(self, runner, tmp_path):
        result = runner.invoke(cli, ["--config-dir", str(tmp_path), "config", "show"])
        assert result.exit_code == 0
        assert "max_minor_pattern" in result.output

    def test_init_twice(self, runner, tmp_path):
        args = ["--config-dir", str(tmp_path / "cfg"), "config", "init"]
        first = runner.invoke(cli, args)
        assert first.exit_code == 0
        assert "Configuration initialized" in first.output
        second = runner.invoke(cli, args)
        assert "already exists" in second.output

    def test_reset_asks_for_confirmation(self, runner, tmp_path):
        config_dir = tmp_path / "cfg"
        args = ["--config-dir", str(config_dir), "config", "reset"]
        declined = runner.invoke(cli, args, input="n\n")
        assert declined.exit_code == 0
        assert not (config_dir / "config.json").exists()
        accepted = runner.invoke(cli, [*args, "--yes"])
        assert "Configuration reset to defaults" in accepted.output
        assert (config_dir / "config.json").exists()

    def test_file_limits_reach_commands(self, runner, tmp_path, fixtures_dir):
        config_dir = tmp_path / "cfg"
        config_dir.mkdir()
        (config_dir / "config.json").write_text(
            json.dumps({"version": "1.0.0", "limits": {"max_pw_vertices": 4}})
        )
        result = runner.invoke(
            cli, ["--config-dir", str(config_dir), "oracle", "pw", str(fixtures_dir / "qk_2.txt")]
        )
        assert result.exit_code == 2
        flagged = runner.invoke(
            cli,
            ["--config-dir", str(config_dir), "oracle", "pw", str(fixtures_dir / "qk_2.txt"), "--limit-pw", "8"],
        )
        assert flagged.exit_code == 0

    def test_invalid_env_is_an_input_error(self, runner, tmp_path, fixtures_dir, monkeypatch):
        monkeypatch.setenv("LAYERED_DECOMP_LIMITS", '{"max_pw_vertices": 0}')
        result = runner.invoke(
            cli, ["--config-dir", str(tmp_path), "oracle", "pw", str(fixtures_dir / "qk_2.txt")]
        )
        assert result.exit_code == 2
