# File: /tests/test_tiling_line.py
# Directory: /tests

"""Tests for exact Fibonacci line tilings and the tiling metric."""

from fractions import Fraction

import numpy as np
import pytest

from hierarchical_tilings.config import TilingConfig
from hierarchical_tilings.core.conjugacy import conjugate
from hierarchical_tilings.core.golden import ONE, TAU, ZERO, GoldenNumber, tau_power
from hierarchical_tilings.core.tiling_line import (
    LineTiling,
    TileSpec,
    Tower,
    TowerExtension,
    hausdorff,
    length_differences,
    length_invariant,
    metric_term,
    relative_translation,
    sample_tiling,
    standard_spec,
    supertile_lengths,
    tiling_metric,
    unit_tiling,
)
from hierarchical_tilings.exceptions import GeometryError, TilingError, ValidationError


class TestSpecs:
    """Test tile specs and supertile lengths."""

    def test_invariant_identity(self, unit_spec, golden_spec):
        """Test 1 + tau * 1 = tau + tau * (tau - 1)."""
        assert length_invariant(unit_spec) == 1 + TAU
        assert length_invariant(golden_spec) == length_invariant(unit_spec)

    def test_standard_spec(self):
        spec = standard_spec(1 + TAU)
        assert spec.is_standard
        assert length_invariant(spec) == 1 + TAU

    def test_supertile_lengths(self, standard):
        """Test standard supertiles grow by tau exactly."""
        for k in range(6):
            lengths = supertile_lengths(standard, k)
            assert lengths["a"] == tau_power(k)
            assert lengths["b"] == tau_power(k + 1)

    def test_length_differences_contract(self, unit_spec, golden_spec):
        contraction = GoldenNumber(1, -1)
        for k in range(8):
            now = length_differences(unit_spec, golden_spec, k)
            after = length_differences(unit_spec, golden_spec, k + 1)
            assert after["b"] == now["b"] * contraction
            assert now["a"] == -TAU * now["b"]

    def test_rejects_nonpositive(self):
        with pytest.raises(ValidationError):
            TileSpec(0, 1)


class TestTower:
    """Test tower addresses."""

    def test_rejects_wrong_child(self):
        with pytest.raises(ValidationError):
            Tower(["a", "b"], [1])

    def test_closed_tower_ends(self):
        tower = Tower(["b", "b"], [1])
        with pytest.raises(TilingError):
            tower.letter(3)

    def test_seeded_extension_is_deterministic(self):
        first = Tower(["a"], [], TowerExtension(seed=7))
        second = Tower(["a"], [], TowerExtension(seed=7))
        assert first.entries(12) == second.entries(12)

    def test_cycle_extension(self):
        tower = Tower(["b"], [], TowerExtension(cycle=(("a", 0), ("b", 0), ("b", 1))))
        assert [tower.letter(k) for k in range(7)] == ["b", "a", "b", "b", "a", "b", "b"]
        assert [tower.index(k) for k in range(6)] == [0, 0, 1, 0, 0, 1]

    def test_extension_needs_exactly_one_source(self):
        with pytest.raises(ValidationError):
            TowerExtension()
        with pytest.raises(ValidationError):
            TowerExtension(seed=1, cycle=(("a", 0),))

    def test_depth_cap(self):
        tower = Tower(["a"], [], TowerExtension(seed=0), max_depth=4)
        with pytest.raises(TilingError):
            tower.ensure(5)


class TestLineTiling:
    """Test tile enumeration and translation."""

    def test_unit_tiles_on_integers(self):
        tiling = unit_tiling(seed=3)
        points = tiling.boundary_points(10)
        assert points == [GoldenNumber(n) for n in range(-10, 11)]

    def test_tiles_are_contiguous(self, standard):
        tiling = sample_tiling(standard, 5)
        tiles = tiling.tiles(-30, 30)
        for (_, _, right), (_, left, _) in zip(tiles, tiles[1:]):
            assert right == left
        assert tiles[0][1] <= -30 and tiles[-1][2] >= 30
        for letter, left, right in tiles:
            assert right - left == standard.length(letter)

    def test_symbols_are_fibonacci_words(self, standard, fib):
        tiling = sample_tiling(standard, 11)
        word = tiling.symbols(40)
        for m in (3, 5, 8):
            for i in range(len(word) - m + 1):
                assert word.sub(i, m) in fib.language(m)

    def test_offset_range(self, standard):
        with pytest.raises(ValidationError):
            LineTiling.from_address(standard, ["a"], [], 1, TowerExtension(seed=0))

    def test_tile_at(self, standard):
        tiling = sample_tiling(standard, 2)
        letter, left, right = tiling.tile_at(0)
        assert left <= 0 < right
        assert left == -tiling.offset

    def test_translate(self, standard):
        tiling = sample_tiling(standard, 4)
        alpha = TAU * 3 + Fraction(1, 7)
        moved = tiling.translate(alpha)
        expected = [p - alpha for p in tiling.boundary_points(40)]
        got = moved.boundary_points(30)
        assert all(p in expected for p in got)
        assert moved.translate(-alpha).same_tiling(tiling)

    def test_relative_translation(self, standard):
        tiling = sample_tiling(standard, 8)
        alpha = Fraction(5, 3)
        assert relative_translation(tiling.translate(alpha), tiling) == -alpha
        assert relative_translation(tiling, tiling) == ZERO

    def test_persistent_boundary(self, standard):
        # every supertile starts where the base tile does, so x < 0 is never covered
        tiling = LineTiling.from_address(standard, ["b"], [], 0, TowerExtension(cycle=(("a", 0), ("b", 0))))
        with pytest.raises(TilingError):
            tiling.tiles(-1, 1)
        assert tiling.tiles(0, 5)[0][1] == 0


class TestMetric:
    """Test the tiling metric."""

    def test_hausdorff(self):
        a = [GoldenNumber(0), GoldenNumber(1)]
        b = [GoldenNumber(0), GoldenNumber(3)]
        assert hausdorff(a, b) == 2
        with pytest.raises(GeometryError):
            hausdorff([], b)

    def test_metric_term_empty_balls(self):
        assert metric_term([], [], 1) == ZERO
        assert metric_term([GoldenNumber(0)], [], 1) == ONE

    def test_unit_shift_by_a_tenth(self):
        x = unit_tiling(seed=0)
        y = x.translate(Fraction(-1, 10))
        result = tiling_metric(x, y)
        assert result.value == Fraction(9, 10)
        assert result.certified

    def test_identical_tilings(self, standard):
        x = sample_tiling(standard, 1)
        assert tiling_metric(x, x).value == ZERO

    @pytest.mark.parametrize("seed", range(6))
    def test_matches_brute_force(self, standard, seed):
        """Test the early-stopped sup against every term up to the stopping horizon."""
        x = sample_tiling(standard, seed)
        alpha = Fraction(seed + 1, 7) + TAU * Fraction(seed, 5)
        y = x.translate(alpha)
        result = tiling_metric(x, y)
        assert result.certified
        horizon = max(result.horizon, 20)
        bx, by = x.boundary_points(horizon), y.boundary_points(horizon)
        brute = max(metric_term(bx, by, n) for n in range(1, horizon + 1))
        assert result.value == brute

    @pytest.mark.parametrize("seed", range(3))
    def test_conjugated_offsets_match_brute_force(self, unit_spec, golden_spec, seed):
        """Test the sup on tilings whose offsets carry large coefficients."""
        y = conjugate(sample_tiling(unit_spec, seed), golden_spec, Fraction(1, 10**8))
        z = y.translate(Fraction(1, 3))
        result = tiling_metric(y, z)
        assert result.certified
        horizon = max(result.horizon, 20)
        by, bz = y.boundary_points(horizon), z.boundary_points(horizon)
        assert result.value == max(metric_term(by, bz, n) for n in range(1, horizon + 1))

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(50))
    def test_matches_brute_force_to_200(self, standard, seed):
        rng = np.random.default_rng(seed)
        x = sample_tiling(standard, seed)
        alpha = Fraction(int(rng.integers(-400, 400)), int(rng.integers(1, 60))) \
            + TAU * Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 12)))
        y = x.translate(alpha)
        result = tiling_metric(x, y)
        assert result.certified
        horizon = max(result.horizon, 200)
        bx, by = x.boundary_points(horizon), y.boundary_points(horizon)
        brute = max(metric_term(bx, by, n) for n in range(1, horizon + 1))
        assert result.value == brute

    @pytest.mark.parametrize("seed", range(4))
    def test_symmetric_and_triangle(self, standard, seed):
        x = sample_tiling(standard, seed)
        y = x.translate(Fraction(1, 3))
        z = x.translate(Fraction(2, 5) + TAU / 7)
        d = {}
        for name, (a, b) in {"xy": (x, y), "yx": (y, x), "yz": (y, z), "xz": (x, z)}.items():
            result = tiling_metric(a, b)
            assert result.certified
            d[name] = result.value
        assert d["xy"] == d["yx"]
        assert d["xz"] <= d["xy"] + d["yz"]

    def test_uncertified_at_small_cap(self):
        x = unit_tiling(seed=0)
        y = x.translate(Fraction(-1, 10**6))
        result = tiling_metric(x, y, TilingConfig(horizon_cap=1))
        assert not result.certified
        assert result.horizon == 1
