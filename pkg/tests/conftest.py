# File: /tests/conftest.py
# Directory: /tests

"""Shared fixtures for the hierarchical-tilings test suite."""

import json

import pytest
from click.testing import CliRunner

from hierarchical_tilings.core.golden import TAU
from hierarchical_tilings.core.substitution import fibonacci
from hierarchical_tilings.core.substitution2d import chair, fibonacci_product
from hierarchical_tilings.core.tiling_line import TileSpec
from hierarchical_tilings.utils.serializer import ReportSerializer


@pytest.fixture
def fib():
    return fibonacci()


@pytest.fixture
def fib2():
    return fibonacci_product()


@pytest.fixture
def chair_system():
    return chair()


@pytest.fixture
def unit_spec():
    return TileSpec(1, 1)


@pytest.fixture
def golden_spec():
    """(tau, tau - 1), conjugate to the unit spec."""
    return TileSpec(TAU, TAU - 1)


@pytest.fixture
def standard():
    return TileSpec(1, TAU)


@pytest.fixture
def serializer():
    return ReportSerializer()


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def rule_file(tmp_path):
    """Write a rule document and return its path."""
    def write(document, name="rules.json"):
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return str(path)
    return write
