# File: /tests/test_parser.py
# Directory: /tests

"""Tests for exact number parsing and rule, tiling and patch documents."""

import json
from fractions import Fraction

import pytest

from hierarchical_tilings.core.conjugacy import WITNESS_CYCLES
from hierarchical_tilings.core.golden import TAU, GoldenNumber
from hierarchical_tilings.core.substitution import Substitution1D
from hierarchical_tilings.core.substitution2d import BlockSubstitution2D
from hierarchical_tilings.core.tiling_line import LineTiling, TowerExtension, sample_tiling
from hierarchical_tilings.core.tiling_plane import ProductTiling
from hierarchical_tilings.exceptions import RuleFileError
from hierarchical_tilings.utils.parser import (
    load_patch,
    load_rules,
    load_tiling,
    parse_exact,
    parse_point,
    rules_from_plain,
    tiling_document,
)

FIBONACCI_RULES = {"kind": "substitution1d", "alphabet": ["a", "b"], "rules": {"a": "b", "b": "ab"}}


class TestParseExact:
    """Test exact number syntax."""

    @pytest.mark.parametrize("text, expected", [
        ("tau-1", TAU - 1),
        ("1+2*tau", 1 + 2 * TAU),
        ("3/2", GoldenNumber(Fraction(3, 2))),
        ("1e-8", GoldenNumber(Fraction(1, 10**8))),
        ("τ", TAU),
        ("-tau", -TAU),
        ("1/2 tau", TAU / 2),
        ("7", GoldenNumber(7)),
    ])
    def test_strings(self, text, expected):
        assert parse_exact(text) == expected

    def test_other_forms(self):
        assert parse_exact(3) == 3
        assert parse_exact(["1/2", "1"]) == Fraction(1, 2) + TAU
        assert parse_exact({"u": "0", "v": "1"}) == TAU
        assert parse_exact(TAU) is TAU

    @pytest.mark.parametrize("value", ["abc", "", True, 1.5, [1, 2, 3], "1+"])
    def test_rejects(self, value):
        with pytest.raises(ValueError):
            parse_exact(value)

    def test_points(self):
        assert parse_point("tau,1/2") == (TAU, Fraction(1, 2))
        with pytest.raises(ValueError):
            parse_point("1,2,3")


class TestRuleFiles:
    """Test rule documents."""

    def test_one_dimensional(self, rule_file):
        document, system = load_rules(rule_file(FIBONACCI_RULES))
        assert isinstance(system, Substitution1D)
        assert system.iterate("b", 3).text() == "abbab"
        assert document.kind == "substitution1d"

    def test_builtins(self, rule_file, fib2):
        _, system = load_rules(rule_file({"kind": "builtin", "name": "chair"}))
        assert isinstance(system, BlockSubstitution2D)
        _, system = load_rules(rule_file({"kind": "builtin", "name": "fibonacci_product"}))
        assert system.rule("b×b") == fib2.rule("b×b")

    def test_product(self, rule_file, fib2):
        rules = {k: v for k, v in FIBONACCI_RULES.items() if k != "kind"}
        _, system = load_rules(rule_file({"kind": "product2d", "horizontal": rules, "vertical": rules}))
        for letter in fib2.alphabet:
            assert system.rule(letter) == fib2.rule(letter)

    def test_block(self, rule_file):
        document = {
            "kind": "block2d",
            "alphabet": ["x", "y"],
            "rules": {"x": [["x", "y"], ["y", "x"]], "y": [["y", "x"], ["x", "y"]]},
        }
        _, system = load_rules(rule_file(document))
        assert system.q == 2

    def test_plain_round_trip(self, rule_file):
        document, _ = load_rules(rule_file(FIBONACCI_RULES))
        again, system = rules_from_plain(document.model_dump())
        assert again == document
        assert system.is_primitive()

    def test_error_position(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{\n  "kind": "substitution1d",\n  "alphabet": ["a", "b"],\n  "rules": {"a": 5}\n}\n')
        with pytest.raises(RuleFileError) as info:
            load_rules(str(path))
        assert info.value.line == 4

    def test_unknown_key(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{\n  "kind": "builtin",\n  "name": "chair",\n  "colour": "red"\n}\n')
        with pytest.raises(RuleFileError) as info:
            load_rules(str(path))
        assert info.value.line == 4

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{\n  "kind": \n')
        with pytest.raises(RuleFileError, match="invalid JSON"):
            load_rules(str(path))

    def test_invalid_substitution(self, rule_file):
        with pytest.raises(RuleFileError) as info:
            load_rules(rule_file({"kind": "substitution1d", "alphabet": ["a", "b"], "rules": {"a": "b"}}))
        assert (info.value.line, info.value.column) == (1, 1)


class TestTilingFiles:
    """Test tiling and patch documents."""

    def test_seeded_round_trip(self, standard, tmp_path):
        tiling = sample_tiling(standard, 3)
        tiling.tiles(-20, 20)
        path = tmp_path / "tiling.json"
        path.write_text(json.dumps(tiling_document(tiling)))
        _, loaded = load_tiling(str(path))
        assert loaded.same_tiling(tiling)
        assert loaded.tiles(-30, 30) == tiling.tiles(-30, 30)

    def test_cycle_round_trip(self, golden_spec, tmp_path):
        tiling = LineTiling.from_address(golden_spec, ["b"], [], Fraction(1, 5),
                                         TowerExtension(cycle=WITNESS_CYCLES[0]))
        path = tmp_path / "tiling.json"
        path.write_text(json.dumps(tiling_document(tiling)))
        document, loaded = load_tiling(str(path))
        assert document.extension.cycle is not None
        assert loaded.same_tiling(tiling)

    def test_levels_in_order(self, tmp_path):
        document = {"spec": {"length_a": 1, "length_b": "tau"}, "top": "b", "tower": [[1, "a", 0]]}
        path = tmp_path / "tiling.json"
        path.write_text(json.dumps(document))
        with pytest.raises(RuleFileError):
            load_tiling(str(path))

    def test_bad_address(self, tmp_path):
        document = {"spec": {"length_a": 1, "length_b": "tau"}, "top": "a", "tower": [[0, "a", 1]]}
        path = tmp_path / "tiling.json"
        path.write_text(json.dumps(document))
        with pytest.raises(RuleFileError):
            load_tiling(str(path))

    def test_patch(self, standard, tmp_path):
        line = tiling_document(sample_tiling(standard, 1))
        path = tmp_path / "patch.json"
        path.write_text(json.dumps({"horizontal": line, "vertical": line}))
        _, patch = load_patch(str(path))
        assert isinstance(patch, ProductTiling)
        assert patch.horizontal.same_tiling(patch.vertical)
