from fractions import Fraction

import pytest

from qhecke.config import RunConfig, load_config_file, resolve_config
from qhecke.exceptions import ConfigError
from qhecke.utils.cache import IdempotentCache


@pytest.fixture(autouse=True)
def clean_directory(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)


def test_defaults():
    config = resolve_config(environ={})
    assert config.mode == "exact"
    assert config.format == "json"
    assert config.log_level == "WARNING"
    assert config.cache() is None
    assert config.arithmetic().is_exact


def test_precedence(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("mode: numeric\nv0: '5/4'\nformat: table\ncache_dir: from-file\n")
    config = resolve_config(str(path), {"format": "json", "output": None}, environ={"QHECKE_CACHE": "from-env"})
    assert config.mode == "numeric"
    assert config.v0_fraction == Fraction(5, 4)
    assert config.format == "json"
    assert config.cache_dir == "from-env"
    assert not config.arithmetic().is_exact


def test_local_file_is_picked_up(tmp_path):
    (tmp_path / "qhecke.yaml").write_text("rank_cutoff: 4\nlog_level: debug\n")
    config = resolve_config(environ={})
    assert config.rank_cutoff == 4
    assert config.log_level == "DEBUG"


def test_cache_directory(tmp_path):
    config = resolve_config(overrides={"cache_dir": str(tmp_path / "c")}, environ={})
    assert isinstance(config.cache(), IdempotentCache)


@pytest.mark.parametrize(
    "values",
    [{"mode": "numeric", "v0": "1"}, {"mode": "numeric", "v0": "-2"}, {"v0": "abc"}, {"colour": "red"}, {"max_degree": -1}],
)
def test_invalid_settings(values):
    with pytest.raises(ConfigError):
        RunConfig.build(values)


def test_config_file_errors(tmp_path):
    listing = tmp_path / "list.yaml"
    listing.write_text("- 1\n- 2\n")
    with pytest.raises(ConfigError):
        load_config_file(str(listing))
    with pytest.raises(ConfigError):
        load_config_file(str(tmp_path / "absent.yaml"))
    empty = tmp_path / "empty.yaml"
    empty.write_text("")
    assert load_config_file(str(empty)) == {}
