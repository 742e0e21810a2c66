"""Tests for configuration management."""

import tomllib

import pytest

from aci_betti import config as config_module
from aci_betti.config import (SEED_ENV, cursor_path, get_setting, load_config,
                              load_settings, save_config, set_setting)
from aci_betti.errors import InvalidInput


@pytest.fixture()
def config_dir(tmp_path, monkeypatch):
    """Redirect config to a temp directory for isolation."""
    config_file = tmp_path / "config.toml"
    monkeypatch.setattr(config_module, "CONFIG_DIR", tmp_path)
    monkeypatch.setattr(config_module, "CONFIG_FILE", config_file)
    monkeypatch.delenv(SEED_ENV, raising=False)
    return tmp_path


class TestSaveLoadConfig:
    def test_load_empty_when_no_file(self, config_dir):
        assert load_config() == {}

    def test_round_trip(self, config_dir):
        save_config({"oracle": {"prime": 101, "seed": 4}, "scan": {"cursor": "/tmp/c.json"}})
        loaded = load_config()
        assert loaded["oracle"] == {"prime": 101, "seed": 4}
        assert loaded["scan"]["cursor"] == "/tmp/c.json"

    def test_special_characters_escaped(self, config_dir):
        save_config({"scan": {"cursor": 'C:\\scans\\"a".json'}})
        assert load_config()["scan"]["cursor"] == 'C:\\scans\\"a".json'

    def test_written_file_is_valid_toml(self, config_dir):
        save_config({"oracle": {"seeds": 2}})
        with open(config_dir / "config.toml", "rb") as f:
            assert tomllib.load(f) == {"oracle": {"seeds": 2}}

    def test_broken_file(self, config_dir):
        (config_dir / "config.toml").write_text("[oracle\nprime = ")
        with pytest.raises(InvalidInput):
            load_config()


class TestSettings:
    def test_defaults(self, config_dir):
        assert get_setting("oracle", "prime") == 32003
        assert get_setting("scan", "cursor") == ""

    def test_unknown_setting(self, config_dir):
        with pytest.raises(InvalidInput):
            get_setting("oracle", "field")

    def test_set_and_get(self, config_dir):
        assert set_setting("oracle.seeds", "5") == 5
        assert get_setting("oracle", "seeds") == 5

    def test_set_requires_integer(self, config_dir):
        with pytest.raises(InvalidInput):
            set_setting("oracle.seed", "abc")

    def test_set_rejects_composite_prime(self, config_dir):
        with pytest.raises(InvalidInput):
            set_setting("oracle.prime", "32001")
        assert load_config() == {}

    def test_set_string(self, config_dir):
        set_setting("scan.cursor", "/data/cursor.json")
        assert str(cursor_path()) == "/data/cursor.json"


class TestLoadSettings:
    def test_defaults(self, config_dir):
        settings = load_settings()
        assert (settings.prime, settings.seed, settings.seeds, settings.retries) == (32003, 0, 3, 5)

    def test_file_overrides_defaults(self, config_dir):
        save_config({"oracle": {"prime": 101, "seed": 9}})
        settings = load_settings()
        assert settings.prime == 101
        assert settings.seed == 9

    def test_env_overrides_file(self, config_dir, monkeypatch):
        save_config({"oracle": {"seed": 9}})
        monkeypatch.setenv(SEED_ENV, "42")
        assert load_settings().seed == 42

    def test_flag_overrides_env(self, config_dir, monkeypatch):
        monkeypatch.setenv(SEED_ENV, "42")
        assert load_settings(seed=7).seed == 7

    def test_bad_env(self, config_dir, monkeypatch):
        monkeypatch.setenv(SEED_ENV, "seven")
        with pytest.raises(InvalidInput):
            load_settings()

    def test_invalid_flags(self, config_dir):
        with pytest.raises(InvalidInput):
            load_settings(prime=100)
        with pytest.raises(InvalidInput):
            load_settings(seeds=0)

    def test_field_config(self, config_dir):
        cfg = load_settings(prime=7, seed=3).field_config
        assert (cfg.prime, cfg.seed) == (7, 3)


class TestCursorPath:
    def test_default_location(self, config_dir):
        assert cursor_path() == config_dir / "scan-cursor.json"

    def test_override(self, config_dir, tmp_path):
        assert cursor_path(tmp_path / "x.json") == tmp_path / "x.json"
