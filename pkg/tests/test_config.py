"""配置文件、运行设置与权重文件的测试"""

import datetime
import json
import logging
from pathlib import Path

import pytest

from ahp.ranking import PriorityMethod
from models.errors import ConfigError
from models.quality import Quality
from utils.config_manager import ConfigManager, RunConfig, load_weights

FLAGS = {"grades_path": "grades.csv", "output_dir": "out"}


def test_defaults_when_file_is_absent(tmp_path):
    manager = ConfigManager(tmp_path / "absent.json")
    assert manager.config == manager.default_config
    assert manager.get("method") == "column"
    assert manager.get("eigen_tol") == 1e-12


def test_file_values_are_merged_over_defaults(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"method": "eigen", "png": True}), encoding="utf-8")
    manager = ConfigManager(path)
    assert manager.get("method") == "eigen"
    assert manager.get("png") is True
    assert manager.get("strict") is True


def test_save_and_reload(tmp_path):
    path = tmp_path / "config.json"
    manager = ConfigManager(path)
    manager.config["saaty_mapping"] = "ratio"
    assert manager.save_config()
    assert ConfigManager(path).get("saaty_mapping") == "ratio"


def test_unreadable_file_falls_back_with_warning(tmp_path, caplog):
    path = tmp_path / "config.json"
    path.write_text("{not json", encoding="utf-8")
    with caplog.at_level(logging.WARNING):
        manager = ConfigManager(path)
    assert manager.config == manager.default_config
    assert "using defaults" in caplog.text


def test_unknown_keys_are_ignored(tmp_path, caplog):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"colour": "blue"}), encoding="utf-8")
    with caplog.at_level(logging.WARNING):
        manager = ConfigManager(path)
    assert "colour" not in manager.config
    assert "unknown config keys" in caplog.text


def test_flags_override_file(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"method": "eigen", "strict": False}), encoding="utf-8")
    manager = ConfigManager(path)
    config = RunConfig.from_sources(dict(FLAGS, method="column", strict=None), manager)
    assert config.priority_method is PriorityMethod.COLUMN_NORMALIZATION
    assert config.strict is False
    assert config.grades_path == Path("grades.csv")
    assert config.records_path is None


def test_workers_come_from_file_unless_flagged(tmp_path, caplog):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"workers": 3}), encoding="utf-8")
    with caplog.at_level(logging.WARNING):
        manager = ConfigManager(path)
    assert "unknown config keys" not in caplog.text
    assert RunConfig.from_sources(dict(FLAGS), manager).workers == 3
    assert RunConfig.from_sources(dict(FLAGS, workers=2), manager).workers == 2
    assert RunConfig.from_sources(dict(FLAGS), ConfigManager(tmp_path / "absent.json")).workers == 1


def test_reference_date_passes_through(tmp_path):
    config = RunConfig.from_sources(dict(FLAGS, reference_date=datetime.date(2018, 6, 1)),
                                    ConfigManager(tmp_path / "absent.json"))
    assert config.reference_date == datetime.date(2018, 6, 1)


@pytest.mark.parametrize("override", [
    {"method": "median"},
    {"saaty_mapping": "log"},
    {"eigen_tol": 0},
    {"eigen_max_iter": 0},
    {"workers": 0},
    {"workers": "4"},
])
def test_invalid_run_config(override):
    with pytest.raises(ConfigError):
        RunConfig(Path("grades.csv"), Path("out"), **override)


def test_equal_weights_keyword():
    weights = load_weights("equal", [Quality.USABILITY, Quality.PORTABILITY])
    assert weights.weights == {Quality.USABILITY: 0.5, Quality.PORTABILITY: 0.5}


def test_weights_file(tmp_path):
    path = tmp_path / "weights.json"
    path.write_text(json.dumps({"usability": 0.25, "portability": 0.75}), encoding="utf-8")
    weights = load_weights(str(path), [Quality.USABILITY, Quality.PORTABILITY])
    assert weights.weights[Quality.PORTABILITY] == 0.75


@pytest.mark.parametrize("content", ["[1, 2]", "{oops", json.dumps({"usability": -0.5})])
def test_bad_weights_file(tmp_path, content):
    path = tmp_path / "weights.json"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(ConfigError):
        load_weights(str(path), [Quality.USABILITY])


def test_missing_weights_file(tmp_path):
    with pytest.raises(OSError):
        load_weights(str(tmp_path / "absent.json"), [Quality.USABILITY])
