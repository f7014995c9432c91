# File: /tests/test_substitution.py
# Directory: /tests

"""Tests for 1D and 2D substitutions and their languages."""

import numpy as np
import pytest

from hierarchical_tilings.core.substitution import Substitution1D, factors_at_level, words_text
from hierarchical_tilings.core.substitution2d import (
    BlockSubstitution2D,
    ProductSubstitution2D,
    product,
)
from hierarchical_tilings.core.symbolic import Pattern, Window, contains
from hierarchical_tilings.exceptions import SubstitutionError, ValidationError


def _block(rows):
    return Pattern.block([row.split() for row in rows])


class TestSubstitution1D:
    """Test the Fibonacci substitution and its language."""

    def test_lengths(self, fib):
        """Test |psi^k(b)| = 1, 2, 3, 5, 8, 13, 21."""
        assert [fib.length("b", k) for k in range(7)] == [1, 2, 3, 5, 8, 13, 21]
        assert [len(fib.iterate("b", k)) for k in range(7)] == [1, 2, 3, 5, 8, 13, 21]

    def test_iterate(self, fib):
        assert fib.iterate("b", 3) == Pattern.word("abbab")
        assert fib.iterate("a", 0) == Pattern.word("a")
        assert fib.apply("ab") == ("b", "a", "b")

    def test_level_letter(self, fib):
        supertile = fib.level_letter("a", 4)
        assert (supertile.base, supertile.level) == ("a", 4)
        assert supertile.expansion == Pattern.word("abbab")
        assert supertile.length == fib.length("a", 4) == 5

    def test_abelianization_and_primitivity(self, fib):
        assert np.array_equal(fib.abelianization(), np.array([[0, 1], [1, 1]]))
        assert fib.is_primitive()
        assert not Substitution1D(("a", "b"), {"a": "ab", "b": "b"}).is_primitive()

    def test_parents(self, fib):
        assert fib.parents("b") == [("a", 0), ("b", 1)]
        assert fib.parents("a") == [("b", 0)]

    def test_rejects_bad_rules(self):
        with pytest.raises(ValidationError):
            Substitution1D(("a", "b"), {"a": "b"})
        with pytest.raises(ValidationError):
            Substitution1D(("a", "b"), {"a": "b", "b": "ac"})
        with pytest.raises(ValidationError):
            Substitution1D(("a", "b"), {"a": "b", "b": "a"})

    def test_small_languages(self, fib):
        assert words_text(fib.language(3)) == ["aba", "abb", "bab", "bba"]
        assert words_text(fib.language(5)) == ["ababb", "abbab", "babab", "babba", "bbaba", "bbabb"]
        assert words_text(fib.language(1)) == ["a", "b"]

    def test_complexity_against_brute_force(self, fib):
        """Test |language(m)| = m + 1 against the subwords of psi^25(b)."""
        long_word = fib.iterate("b", 25).cells
        for m in range(1, 21):
            language = {w.cells for w in fib.language(m)}
            brute = {long_word[i:i + m] for i in range(len(long_word) - m + 1)}
            assert len(language) == m + 1
            assert language == brute

    def test_factors_at_level_matches_saturation(self, fib):
        for m in (2, 4, 7):
            assert factors_at_level(fib, m, 14) == fib.language(m)

    def test_uncached_language_agrees(self, fib):
        assert fib.language(6, use_cache=False) == fib.language(6)

    def test_non_primitive_needs_cap(self):
        system = Substitution1D(("a", "b"), {"a": "ab", "b": "b"})
        with pytest.raises(SubstitutionError):
            system.language(2)
        assert words_text(system.language(2, level_cap=4)) == ["ab", "bb"]


class TestProduct:
    """Test the product substitution F(2)."""

    def test_rule_table(self, fib2):
        """Test the four rule images of psi x psi."""
        assert fib2.rule("a×a") == _block(["b×b"])
        assert fib2.rule("a×b") == _block(["b×a", "b×b"])
        assert fib2.rule("b×a") == _block(["a×b b×b"])
        assert fib2.rule("b×b") == _block(["a×a b×a", "a×b b×b"])

    def test_constant_block_at_level_3(self, fib2):
        pattern = fib2.iterate2d("b×b", 3)
        assert pattern.extent == (5, 5)
        assert contains(pattern, _block(["b×b b×b", "b×b b×b"]))

    @pytest.mark.parametrize("level", range(7))
    def test_product_formula_matches_recursion(self, fib2, level):
        for letter in fib2.alphabet:
            assert fib2.iterate2d(letter, level) == fib2.iterate_recursive(letter, level)

    def test_language_methods_agree(self, fib2):
        by_product = fib2.language2d(1)
        assert len(by_product) == 16
        assert fib2.language2d(1, method="saturation") == by_product
        with pytest.raises(ValidationError):
            fib2.language2d(1, method="guess")

    def test_admits(self, fib2):
        good = Window(1, _block(["b×b a×b b×b", "b×a a×a b×a", "b×b a×b b×b"]))
        assert fib2.admits(good)
        # aaa is not a Fibonacci word
        bad = Window(1, _block(["a×b a×b a×b", "a×a a×a a×a", "a×b a×b a×b"]))
        assert not fib2.admits(bad)

    def test_hierarchy(self, fib2):
        assert fib2.hierarchy_counts("b×b", 3) == [25, 9, 4, 1]
        boxes = fib2.supertile_boxes("b×b", 2)
        assert boxes[2] == [(0, 0, 3, 3)]
        assert len(boxes[0]) == 9
        assert sum(w * h for _, _, w, h in boxes[1]) == 9

    def test_product_requires_primitive_factors(self, fib):
        lazy = Substitution1D(("a", "b"), {"a": "ab", "b": "b"})
        with pytest.raises(SubstitutionError):
            product(fib, lazy)
        assert isinstance(ProductSubstitution2D(fib, lazy), ProductSubstitution2D)


class TestChair:
    """Test the block-coded chair substitution."""

    def test_primitive_uniform(self, chair_system):
        assert chair_system.is_primitive()
        assert chair_system.q == 2
        assert chair_system.extent("ne", 3) == (8, 8)

    def test_rule_shape(self, chair_system):
        # three cells keep the parent's orientation
        for letter in chair_system.alphabet:
            image = chair_system.rule(letter)
            assert image.cells.count(letter) == 3

    def test_counts(self, chair_system):
        assert chair_system.hierarchy_counts("ne", 3) == [64, 16, 4, 1]

    def test_desubstitute_inverts(self, chair_system):
        level2 = chair_system.iterate2d("ne", 2)
        assert chair_system.desubstitute(level2) == chair_system.iterate2d("ne", 1)
        with pytest.raises(SubstitutionError):
            chair_system.desubstitute(Pattern.block([["ne", "ne", "ne"]] * 3))

    def test_no_constant_block(self, chair_system):
        for letter in chair_system.alphabet:
            pattern = chair_system.iterate2d(letter, 4)
            for token in chair_system.alphabet:
                assert not contains(pattern, Pattern.block([[token, token], [token, token]]))

    def test_block_rules_must_be_square(self):
        with pytest.raises(SubstitutionError):
            BlockSubstitution2D(("x",), {"x": Pattern.block([["x", "x"]])})
