# File: /hierarchical_tilings/core/golden.py
# Directory: /hierarchical_tilings/core

"""
Exact arithmetic in Q[tau], tau = (1 + sqrt 5) / 2.

Values are stored as three integers (p, q, d) meaning (p + q*tau) / d with
d > 0 and gcd(p, q, d) = 1, so comparisons and products never leave the
integers. tau satisfies tau**2 = tau + 1 exactly.
"""

from __future__ import annotations

import math
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import total_ordering
from typing import List, Tuple, Union

Rational = Union[int, Fraction]
GoldenLike = Union["GoldenNumber", int, Fraction]

# fractional bits kept when rounding to float
_FLOAT_BITS = 64


def _sign_sqrt5(a: int, b: int) -> int:
    """Sign of a + b*sqrt(5) in exact integer arithmetic."""
    if a >= 0 and b >= 0:
        return 0 if a == 0 and b == 0 else 1
    if a <= 0 and b <= 0:
        return -1
    diff = a * a - 5 * b * b
    if a > 0:
        return 1 if diff > 0 else -1
    return 1 if diff < 0 else -1


@total_ordering
class GoldenNumber:
    """An exact element u + v*tau of Q[tau]."""

    __slots__ = ("_p", "_q", "_d")

    def __init__(self, u: Rational = 0, v: Rational = 0) -> None:
        u = Fraction(u)
        v = Fraction(v)
        d = u.denominator * v.denominator // math.gcd(u.denominator, v.denominator)
        self._set(u.numerator * (d // u.denominator), v.numerator * (d // v.denominator), d)

    def _set(self, p: int, q: int, d: int) -> None:
        if d < 0:
            p, q, d = -p, -q, -d
        g = math.gcd(math.gcd(p, q), d)
        if g > 1:
            p, q, d = p // g, q // g, d // g
        self._p, self._q, self._d = p, q, d

    @classmethod
    def _raw(cls, p: int, q: int, d: int = 1) -> GoldenNumber:
        obj = cls.__new__(cls)
        obj._set(p, q, d)
        return obj

    @classmethod
    def coerce(cls, value: GoldenLike) -> GoldenNumber:
        if isinstance(value, GoldenNumber):
            return value
        if isinstance(value, (int, Fraction)):
            value = Fraction(value)
            return cls._raw(value.numerator, 0, value.denominator)
        if isinstance(value, str):
            return cls(Fraction(value))
        raise TypeError(f"cannot interpret {value!r} as an element of Q[tau]")

    @property
    def u(self) -> Fraction:
        return Fraction(self._p, self._d)

    @property
    def v(self) -> Fraction:
        return Fraction(self._q, self._d)

    def is_rational(self) -> bool:
        return self._q == 0

    def __repr__(self) -> str:
        return f"GoldenNumber({self.u}, {self.v})"

    def __str__(self) -> str:
        if self._q == 0:
            return str(self.u)
        if self._p == 0:
            return f"{self.v}τ"
        sign = "+" if self._q > 0 else "-"
        return f"{self.u}{sign}{abs(self.v)}τ"

    # arithmetic

    def __add__(self, other: GoldenLike) -> GoldenNumber:
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        if self._d == o._d:
            return GoldenNumber._raw(self._p + o._p, self._q + o._q, self._d)
        return GoldenNumber._raw(
            self._p * o._d + o._p * self._d,
            self._q * o._d + o._q * self._d,
            self._d * o._d,
        )

    __radd__ = __add__

    def __neg__(self) -> GoldenNumber:
        return GoldenNumber._raw(-self._p, -self._q, self._d)

    def __pos__(self) -> GoldenNumber:
        return self

    def __sub__(self, other: GoldenLike) -> GoldenNumber:
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: GoldenLike) -> GoldenNumber:
        return GoldenNumber.coerce(other) - self

    def __mul__(self, other: GoldenLike) -> GoldenNumber:
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        p1, q1, p2, q2 = self._p, self._q, o._p, o._q
        # tau**2 = tau + 1
        return GoldenNumber._raw(
            p1 * p2 + q1 * q2,
            p1 * q2 + q1 * p2 + q1 * q2,
            self._d * o._d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> GoldenNumber:
        """Galois conjugate: tau -> 1 - tau."""
        return GoldenNumber._raw(self._p + self._q, -self._q, self._d)

    def norm(self) -> Fraction:
        """Field norm, the product with the Galois conjugate."""
        p, q = self._p, self._q
        return Fraction(p * p + p * q - q * q, self._d * self._d)

    def __truediv__(self, other: GoldenLike) -> GoldenNumber:
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        n = o._p * o._p + o._p * o._q - o._q * o._q
        if n == 0:
            raise ZeroDivisionError("division by zero in Q[tau]")
        c = GoldenNumber._raw(o._p + o._q, -o._q, 1)
        num = GoldenNumber._raw(self._p, self._q, 1) * c
        return GoldenNumber._raw(num._p * o._d, num._q * o._d, num._d * self._d * n)

    def __rtruediv__(self, other: GoldenLike) -> GoldenNumber:
        return GoldenNumber.coerce(other) / self

    def __pow__(self, exponent: int) -> GoldenNumber:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return GoldenNumber(1) / (self ** -exponent)
        result = GoldenNumber._raw(1, 0, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ordering

    def sign(self) -> int:
        return _sign_sqrt5(2 * self._p + self._q, self._q)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GoldenNumber):
            return self._p == other._p and self._q == other._q and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self._q == 0 and Fraction(self._p, self._d) == other
        return NotImplemented

    def __lt__(self, other: GoldenLike) -> bool:
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self) -> int:
        if self._q == 0:
            return hash(Fraction(self._p, self._d))
        return hash((self._p, self._q, self._d))

    def __bool__(self) -> bool:
        return self._p != 0 or self._q != 0

    def __abs__(self) -> GoldenNumber:
        return -self if self.sign() < 0 else self

    def _twice_numerator(self, bits: int) -> int:
        """2^bits (2p + q + q sqrt 5), truncated toward zero in the sqrt 5 term."""
        root = math.isqrt((5 * self._q * self._q) << (2 * bits))
        return ((2 * self._p + self._q) << bits) + (root if self._q >= 0 else -root)

    def __float__(self) -> float:
        # rounded from an integer approximation, so large p and q of opposite
        # sign do not cancel in floating point
        return float(Fraction(self._twice_numerator(_FLOAT_BITS), self._d << (_FLOAT_BITS + 1)))

    def floor(self) -> int:
        """Exact floor, seeded by an integer square root and corrected exactly."""
        n = self._twice_numerator(0) // (2 * self._d)
        while GoldenNumber(n) > self:
            n -= 1
        while GoldenNumber(n + 1) <= self:
            n += 1
        return n

    def mod(self, modulus: GoldenLike) -> GoldenNumber:
        """Reduce into [0, modulus) for a positive modulus."""
        m = GoldenNumber.coerce(modulus)
        return self - m * (self / m).floor()

    # serialization

    def to_pair(self) -> Tuple[str, str]:
        return str(self.u), str(self.v)

    @classmethod
    def from_pair(cls, pair) -> GoldenNumber:
        u, v = pair
        return cls(Fraction(u), Fraction(v))

    def decimal_string(self, places: int = 12) -> str:
        with localcontext() as ctx:
            ctx.prec = places + 30
            tau = (Decimal(1) + Decimal(5).sqrt()) / 2
            value = (Decimal(self._p) + Decimal(self._q) * tau) / Decimal(self._d)
            return str(value.quantize(Decimal(1).scaleb(-places)))


TAU = GoldenNumber(0, 1)
ZERO = GoldenNumber(0)
ONE = GoldenNumber(1)


def golden(value: GoldenLike) -> GoldenNumber:
    """Coerce an int, Fraction, rational string or GoldenNumber."""
    return GoldenNumber.coerce(value)


def tau_power(n: int) -> GoldenNumber:
    """tau**n = F(n-1) + F(n)*tau, valid for every integer n."""
    if n < 0:
        # tau**-1 = tau - 1
        return GoldenNumber(-1, 1) ** (-n)
    a, b = 1, 0  # F(-1), F(0)
    for _ in range(n):
        a, b = b, a + b
    return GoldenNumber(a, b)


def golden_max(values: List[GoldenNumber]) -> GoldenNumber:
    best = values[0]
    for value in values[1:]:
        if value > best:
            best = value
    return best
