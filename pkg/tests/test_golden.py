# File: /tests/test_golden.py
# Directory: /tests

"""Tests for exact arithmetic in Q[tau]."""

import math
from fractions import Fraction

import pytest

from hierarchical_tilings.core.golden import (
    ONE,
    TAU,
    ZERO,
    GoldenNumber,
    golden,
    golden_max,
    tau_power,
)


class TestArithmetic:
    """Test the field operations."""

    def test_tau_squared(self):
        """Test tau**2 = tau + 1."""
        assert TAU * TAU == TAU + 1
        assert TAU ** 2 == TAU + ONE

    def test_inverse(self):
        """Test 1/tau = tau - 1."""
        assert 1 / TAU == TAU - 1
        assert TAU ** -1 == TAU - 1

    def test_division_round_trip(self):
        a = GoldenNumber(Fraction(3, 7), -2)
        b = GoldenNumber(5, Fraction(1, 3))
        assert (a / b) * b == a

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            ONE / ZERO

    def test_powers_match_fibonacci(self):
        """Test tau**n = F(n-1) + F(n) tau."""
        assert tau_power(5) == GoldenNumber(3, 5)
        assert tau_power(0) == ONE
        assert tau_power(-3) == TAU ** -3
        assert tau_power(7) * tau_power(-7) == ONE

    def test_conjugate_and_norm(self):
        x = GoldenNumber(2, 3)
        assert x.conjugate() == GoldenNumber(5, -3)
        assert x.norm() == Fraction(4 + 6 - 9)
        assert x * x.conjugate() == GoldenNumber(x.norm())

    def test_rational_equality(self):
        assert GoldenNumber(Fraction(1, 2)) == Fraction(1, 2)
        assert GoldenNumber(2) == 2
        assert GoldenNumber(0, 1) != 1
        assert hash(GoldenNumber(3)) == hash(3)


class TestOrdering:
    """Test exact comparison."""

    def test_sign_near_zero(self):
        """Test the sign of 34 tau - 55, about 0.013."""
        assert GoldenNumber(-55, 34) > 0
        assert GoldenNumber(55, -34) < 0
        assert GoldenNumber(-89, 55) < 0

    def test_floor(self):
        assert TAU.floor() == 1
        assert (-TAU).floor() == -2
        assert GoldenNumber(-55, 34).floor() == 0
        assert GoldenNumber(3).floor() == 3

    def test_floor_of_huge_coefficients(self):
        assert GoldenNumber(10**400, 1).floor() == 10**400 + 1
        for q in (10**400, -10**400, 3**500):
            value = GoldenNumber(0, q)
            n = value.floor()
            assert GoldenNumber(n) <= value < GoldenNumber(n + 1)

    def test_mod(self):
        assert (TAU * 3).mod(1) == TAU * 3 - 4
        assert GoldenNumber(5).mod(TAU) == GoldenNumber(5) - TAU * 3

    def test_max_and_abs(self):
        values = [GoldenNumber(1), TAU, GoldenNumber(-3)]
        assert golden_max(values) == TAU
        assert abs(GoldenNumber(-3)) == 3


class TestConversions:
    """Test coercion and text forms."""

    def test_coerce(self):
        assert golden(Fraction(3, 2)) == GoldenNumber(Fraction(3, 2))
        assert golden("1/4") == GoldenNumber(Fraction(1, 4))
        with pytest.raises(TypeError):
            golden(1.5)

    def test_pair_round_trip(self):
        x = GoldenNumber(Fraction(-7, 3), Fraction(2, 5))
        assert x.to_pair() == ("-7/3", "2/5")
        assert GoldenNumber.from_pair(x.to_pair()) == x

    def test_decimal_string(self):
        assert GoldenNumber(Fraction(9, 10)).decimal_string(4) == "0.9000"
        assert TAU.decimal_string(10) == "1.6180339887"

    def test_float(self):
        assert float(TAU) == pytest.approx(1.6180339887)

    def test_float_of_negative_powers(self):
        # p and q near 1e12 with opposite signs
        expected = ((1 + math.sqrt(5)) / 2) ** -60
        assert abs(float(tau_power(-60)) - expected) < 1e-18
        assert float(tau_power(-200)) == pytest.approx(0, abs=1e-18)

    def test_str(self):
        assert str(GoldenNumber(1, -1)) == "1-1τ"
        assert str(TAU) == "1τ"
