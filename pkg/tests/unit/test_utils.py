"""
Defaults table, worker pool and error hierarchy
"""

import pytest

from bergoplab.utils import Config, config, ordered_map
from bergoplab.utils.errors import ConfigError, LabError, ParameterError, SelfMapError


def test_config_is_a_singleton():
    assert Config() is config
    assert config.get("operators", "truncation") == config.truncation
    assert config.get("nonexistent", "key", default=3) == 3


def test_set_and_restore():
    before = config.get("runtime", "threads", default=1)
    config.set("runtime", "threads", value=3)
    try:
        assert config.threads == 3
    finally:
        config.set("runtime", "threads", value=before)


def test_missing_defaults_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        Config().load_config(str(tmp_path / "missing.yaml"))
    assert config.truncation > 0


@pytest.mark.parametrize("threads", [1, 4])
def test_ordered_map_keeps_submission_order(threads):
    assert ordered_map(lambda x: x * x, range(20), threads) == [x * x for x in range(20)]


def test_error_hierarchy():
    error = ConfigError("bad value", "numerics.M")
    assert str(error) == "numerics.M: bad value"
    assert isinstance(error, ParameterError)
    assert isinstance(error, ValueError)
    assert isinstance(SelfMapError("leaves the disk", witness=0.9), LabError)
