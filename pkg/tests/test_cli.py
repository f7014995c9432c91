# File: /tests/test_cli.py
# Directory: /tests

"""Tests for the hier-tilings command line interface."""

import json
from fractions import Fraction

import msgpack
import pytest

from hierarchical_tilings.cli.main import cli
from hierarchical_tilings.core.tiling_line import unit_tiling
from hierarchical_tilings.utils.parser import tiling_document


@pytest.fixture
def invoke(runner, tmp_path, serializer):
    """Run a command with -o and return (exit code, parsed report or None)."""
    def run(*args, name="report.json", options=()):
        path = tmp_path / name
        result = runner.invoke(cli, [*options, "-o", str(path), *args])
        report = serializer.deserialize(path.read_bytes()) if path.exists() and path.suffix == ".json" else None
        return result.exit_code, report
    return run


class TestSubstitute:
    """Test the substitute command."""

    def test_fibonacci(self, invoke):
        code, report = invoke("substitute", "fibonacci", "b", "3")
        assert code == 0
        assert report["command"] == "substitute"
        assert report["result"]["pattern"]["text"] == "abbab"
        assert report["result"]["hierarchy"] == [1, 2, 3, 5]

    def test_render(self, invoke, tmp_path):
        svg = tmp_path / "patch.svg"
        code, report = invoke("substitute", "fibonacci_product", "b×b", "2", "--render", str(svg))
        assert code == 0
        assert report["result"]["hierarchy"] == [9, 4, 1]
        assert report["result"]["svg"] == {"area_consistent": True, "cells": 9, "outlines": {"1": 4, "2": 1}}
        assert "<svg" in svg.read_text()

    def test_unknown_letter(self, invoke):
        code, report = invoke("substitute", "fibonacci", "c", "3")
        assert code == 2
        assert report is None

    def test_bad_rule_file(self, invoke, rule_file):
        path = rule_file({"kind": "substitution1d", "alphabet": ["a", "b"], "rules": {"a": 5}})
        code, _ = invoke("substitute", path, "a", "2")
        assert code == 2


class TestSeparation:
    """Test verify-separation and check-certificate."""

    def test_certified(self, invoke):
        code, report = invoke("verify-separation", "-n", "1")
        assert code == 0
        result = report["result"]
        assert result["certified"] and result["re_verified"]
        assert result["refutation"]["size"] == 4
        assert result["m_cap"] == 24
        assert report["certificate"]["radius"] == 1

    def test_chair_refused(self, invoke):
        code, report = invoke("verify-separation", "--rules", "chair")
        assert code == 1
        assert report["result"]["certified"] is False
        assert "constant 2x2 block hypothesis not witnessed" in report["result"]["reason"]

    def test_check_certificate(self, invoke, tmp_path):
        invoke("verify-separation", "-n", "1", name="separation.json")
        code, report = invoke("check-certificate", str(tmp_path / "separation.json"), name="check.json")
        assert code == 0
        assert report["result"] == {"radius": 1, "valid": True}

    def test_tampered_certificate(self, invoke, tmp_path):
        invoke("verify-separation", "-n", "1", name="separation.json")
        path = tmp_path / "separation.json"
        report = json.loads(path.read_text())
        report["certificate"]["transcript"] = report["certificate"]["transcript"][:1]
        path.write_text(json.dumps(report))
        code, checked = invoke("check-certificate", str(path), name="check.json")
        assert code == 1
        assert checked["result"]["valid"] is False

    def test_report_without_certificate(self, invoke, tmp_path):
        invoke("language", "fibonacci", "-m", "3", name="language.json")
        code, _ = invoke("check-certificate", str(tmp_path / "language.json"), name="check.json")
        assert code == 2

    def test_deterministic(self, invoke, tmp_path):
        invoke("verify-separation", "-n", "1", name="first.json")
        invoke("verify-separation", "-n", "1", name="second.json")
        assert (tmp_path / "first.json").read_bytes() == (tmp_path / "second.json").read_bytes()


class TestLanguage:
    """Test the language command."""

    def test_words(self, invoke):
        code, report = invoke("language", "fibonacci", "-m", "5")
        assert code == 0
        assert report["result"] == {
            "count": 6,
            "words": ["ababb", "abbab", "babab", "babba", "bbaba", "bbabb"],
        }

    def test_radius(self, invoke):
        _, report = invoke("language", "fibonacci", "-n", "1")
        assert report["result"]["count"] == 4
        _, report = invoke("language", "fibonacci_product", "-n", "1", name="product.json")
        assert report["result"]["count"] == 16

    def test_needs_one_size(self, invoke):
        code, _ = invoke("language", "fibonacci", "-m", "3", "-n", "1")
        assert code == 2

    def test_msgpack(self, invoke, tmp_path):
        code, _ = invoke("language", "fibonacci", "-m", "2", name="language.msgpack",
                         options=("--format", "msgpack"))
        path = tmp_path / "language.msgpack"
        assert code == 0
        report = msgpack.unpackb(path.read_bytes(), raw=False)
        assert report["result"]["words"] == ["ab", "ba", "bb"]


class TestAperiodic:
    """Test the aperiodic command."""

    def test_complete(self, invoke):
        code, report = invoke("aperiodic", "fibonacci", "-P", "6")
        assert code == 0
        assert report["result"]["complete"] is True
        assert report["result"]["survivors"] == []

    def test_survivors(self, invoke):
        code, report = invoke("aperiodic", "fibonacci", "-P", "2", "--m-cap", "2")
        assert code == 1
        assert report["result"]["survivors"] == ["b", "ab"]

    def test_one_dimensional_only(self, invoke):
        code, _ = invoke("aperiodic", "fibonacci_product")
        assert code == 2


class TestTilings:
    """Test the conjugacy, metric, offsets, census and frame commands."""

    def test_conjugate(self, invoke):
        code, report = invoke("fib-conjugate", "--seed", "3")
        assert code == 0
        result = report["result"]
        assert result["exact"] is False
        assert result["image"]["spec"] == {"length_a": ["0", "1"], "length_b": ["-1", "1"]}
        assert result["tiles"]

    def test_not_conjugate(self, invoke):
        code, _ = invoke("fib-conjugate", "--source", "1,2")
        assert code == 1

    def test_witness(self, invoke):
        code, report = invoke("fib-conjugate", "--witness", "8")
        assert code == 0
        assert report["result"]["detect_code"] == {str(r): False for r in range(5)}

    def test_metric(self, invoke, tmp_path):
        x = unit_tiling(seed=0)
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        a.write_text(json.dumps(tiling_document(x)))
        b.write_text(json.dumps(tiling_document(x.translate(Fraction(-1, 10)))))
        code, report = invoke("metric", str(a), str(b))
        assert code == 0
        assert report["result"]["value"]["u"] == "9/10"
        assert report["result"]["certified"] is True

    def test_offsets(self, invoke):
        code, report = invoke("offsets", "--rows", "3", "-R", "10")
        assert code == 0
        assert report["result"]["distinct_offsets"] >= 1

    def test_census(self, invoke):
        code, report = invoke("census", "--side", "x", "-R", "1/2", "--budget", "50",
                              "--rows", "10", "--width", "40")
        assert code == 0
        assert report["result"]["classes"] == 2

    def test_census_needs_rows(self, invoke):
        code, _ = invoke("census", "--rows", "3", "-R", "3/2")
        assert code == 2

    def test_frame_witness(self, invoke, tmp_path):
        svg = tmp_path / "frame.svg"
        code, report = invoke("frame", "--witness-level", "2", "--render", str(svg))
        assert code == 0
        assert report["result"]["witness"] is True
        assert svg.exists()

    def test_frame_refused(self, invoke):
        code, report = invoke("frame", "--witness-level", "2", "--t", "0,1")
        assert code == 1
        assert report["result"]["witness"] is False

    def test_frame_needs_input(self, invoke):
        code, _ = invoke("frame")
        assert code == 2

    def test_bad_exact_option(self, invoke):
        code, _ = invoke("fib-conjugate", "--epsilon", "one")
        assert code == 2
