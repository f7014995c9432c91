# File: /tests/test_utils.py
# Directory: /tests

"""Tests for configuration, logging, performance and argument validation."""

import json
import logging
from fractions import Fraction

import pytest

from hierarchical_tilings.config import Config, TilingConfig
from hierarchical_tilings.exceptions import ConfigurationError, ValidationError
from hierarchical_tilings.utils.logging import HierarchyFormatter, get_logger, setup_logging
from hierarchical_tilings.utils.performance import PerformanceMonitor
from hierarchical_tilings.utils.validation import Validator, validate_report_data


class TestConfig:
    """Test configuration loading."""

    def test_defaults(self):
        config = Config()
        assert config.tiling.epsilon == Fraction(1, 10**8)
        assert config.tiling.frame_margin == Fraction(1, 8)
        assert config.enumeration.m_cap_factor == 8
        assert config.output.format == "json"

    def test_from_file(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"tiling": {"epsilon": "1/1000", "horizon_cap": 64},
                                    "output": {"format": "msgpack"}}))
        config = Config.from_file(str(path))
        assert config.tiling.epsilon == Fraction(1, 1000)
        assert config.tiling.horizon_cap == 64
        assert config.output.format == "msgpack"
        assert config.enumeration.saturation_level_cap == 64

    def test_unknown_section(self):
        with pytest.raises(ConfigurationError):
            Config.from_dict({"network": {}})
        with pytest.raises(ConfigurationError):
            Config.from_dict({"tiling": {"speed": 1}})

    def test_invalid_values(self):
        with pytest.raises(ConfigurationError):
            TilingConfig(epsilon=0)
        with pytest.raises(ConfigurationError):
            Config.from_dict({"output": {"format": "xml"}})

    def test_from_environment(self, monkeypatch):
        monkeypatch.setenv("HIER_TILINGS_EPSILON", "1/64")
        monkeypatch.setenv("HIER_TILINGS_SEED", "7")
        config = Config.from_environment()
        assert config.tiling.epsilon == Fraction(1, 64)
        assert config.output.default_seed == 7


class TestLogging:
    """Test logging setup."""

    def test_setup(self, tmp_path):
        config = Config().logging
        config.level = "DEBUG"
        config.file_path = str(tmp_path / "run.log")
        logger = setup_logging(config, "hierarchical_tilings.test_setup")
        assert logger.level == logging.DEBUG
        assert len(logger.handlers) == 2
        assert setup_logging(config, "hierarchical_tilings.test_setup") is logger
        assert len(logger.handlers) == 2
        for handler in logger.handlers:
            handler.close()
        logger.handlers.clear()

    def test_formatter_tags(self):
        formatter = HierarchyFormatter("%(message)s")
        record = logging.LogRecord("x", logging.INFO, __file__, 1, "saturated", None, None)
        record.command = "language"
        record.level_tag = 3
        assert formatter.format(record) == "[language] [level 3] saturated"

    def test_get_logger(self):
        assert get_logger("cli").name == "hierarchical_tilings.cli"


class TestPerformance:
    """Test stage timing."""

    def test_stage(self):
        monitor = PerformanceMonitor()
        with monitor.stage("iterate"):
            pass
        with monitor.stage("iterate"):
            pass
        stats = monitor.get_all_stats()
        assert stats["iterate_duration"]["count"] == 2
        assert stats["iterate_duration"]["total"] >= 0

    def test_unknown_timer(self):
        assert PerformanceMonitor().end_timer("missing_1") == 0.0


class TestValidation:
    """Test argument validation."""

    def test_letter_and_level(self, fib):
        assert Validator.validate_letter(fib, "a") == "a"
        with pytest.raises(ValidationError):
            Validator.validate_letter(fib, "c")
        with pytest.raises(ValidationError):
            Validator.validate_level(65)

    def test_dimension(self, fib, fib2):
        assert Validator.validate_dimension(fib2, 2) is fib2
        with pytest.raises(ValidationError):
            Validator.validate_dimension(fib, 2)

    def test_report_data(self):
        ok, error = validate_report_data({"command": "x", "inputs": {}, "result": {}})
        assert not ok and "certificate" in error
        certificate = {"radius": 1, "config": {}, "transcript": [], "refutation": {}, "m_cap": 8}
        ok, error = validate_report_data({"command": "x", "inputs": {"rules": {}}, "result": {},
                                          "certificate": certificate})
        assert ok and error is None
