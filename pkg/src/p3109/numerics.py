"""Exact dyadic arithmetic and the closed extended reals.

Every finite quantity handled by this package is a dyadic rational
``m * 2**e``.  Host floats are never used for values.
"""

from __future__ import annotations

import enum
import re
from fractions import Fraction
from typing import Union


class ZeroInput(ValueError):
    pass


class Dyadic:
    """An exact number ``m * 2**e`` with integer ``m`` and ``e``.

    Storage is normalized on construction (``m`` odd, or ``m == e == 0``),
    so equality and hashing agree with the rational value.
    """

    __slots__ = ("m", "e")

    def __init__(self, m: int = 0, e: int = 0):
        m = int(m)
        e = int(e)
        if m == 0:
            e = 0
        elif not m & 1:
            tz = (m & -m).bit_length() - 1
            m >>= tz
            e += tz
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "e", e)

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic is immutable")

    def __reduce__(self):
        return (Dyadic, (self.m, self.e))

    # construction helpers

    @classmethod
    def from_fraction(cls, q) -> "Dyadic":
        q = Fraction(q)
        den = q.denominator
        if den & (den - 1):
            raise ValueError(f"{q} is not a dyadic rational")
        return cls(q.numerator, -(den.bit_length() - 1))

    @classmethod
    def parse(cls, text: str) -> "Dyadic":
        """Parse ``[-]digits[.digits]`` or ``m*2^e``.

        Exponent notation (``1e-3``) is rejected on purpose.
        """
        t = text.strip()
        hit = _POW2_RE.fullmatch(t)
        if hit:
            return cls(int(hit.group(1)), int(hit.group(2)))
        if not _DECIMAL_RE.fullmatch(t):
            raise ValueError(f"not an exact decimal or m*2^e literal: {text!r}")
        return cls.from_fraction(Fraction(t))

    # conversions

    def to_fraction(self) -> Fraction:
        if self.e >= 0:
            return Fraction(self.m << self.e)
        return Fraction(self.m, 1 << -self.e)

    def as_ratio(self):
        """Return ``(num, den)`` with ``den`` a positive power of two."""
        if self.e >= 0:
            return self.m << self.e, 1
        return self.m, 1 << -self.e

    def decimal(self) -> str:
        """Exact decimal rendering; dyadics always terminate."""
        m, e = self.m, self.e
        if e >= 0:
            return str(m << e)
        sign = "-" if m < 0 else ""
        digits = str(abs(m) * 5 ** -e).rjust(-e + 1, "0")
        whole, frac = digits[:e], digits[e:]
        return f"{sign}{whole}.{frac}"

    def __str__(self):
        return self.decimal()

    def __repr__(self):
        return f"Dyadic({self.m}, {self.e})"

    # predicates

    def is_zero(self) -> bool:
        return self.m == 0

    def is_integer(self) -> bool:
        return self.e >= 0

    def sign(self) -> int:
        return (self.m > 0) - (self.m < 0)

    # arithmetic

    def __add__(self, other):
        if not isinstance(other, Dyadic):
            if isinstance(other, int):
                other = Dyadic(other)
            else:
                return NotImplemented
        if self.m == 0:
            return other
        if other.m == 0:
            return self
        if self.e <= other.e:
            return Dyadic(self.m + (other.m << (other.e - self.e)), self.e)
        return Dyadic((self.m << (self.e - other.e)) + other.m, other.e)

    __radd__ = __add__

    def __neg__(self):
        return Dyadic(-self.m, self.e)

    def __sub__(self, other):
        if isinstance(other, int):
            other = Dyadic(other)
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self + Dyadic(-other.m, other.e)

    def __rsub__(self, other):
        return (-self) + other

    def __abs__(self):
        return self if self.m >= 0 else Dyadic(-self.m, self.e)

    def __mul__(self, other):
        if isinstance(other, int):
            other = Dyadic(other)
        if not isinstance(other, Dyadic):
            return NotImplemented
        return Dyadic(self.m * other.m, self.e + other.e)

    __rmul__ = __mul__

    def scale(self, k: int) -> "Dyadic":
        """Multiply by ``2**k`` exactly."""
        if self.m == 0:
            return self
        return Dyadic(self.m, self.e + k)

    # ordering

    def _cmp(self, other) -> int:
        if isinstance(other, int):
            other = Dyadic(other)
        a, b = self.m, other.m
        if (a > 0) != (b > 0) or a == 0 or b == 0:
            return (a > b) - (a < b)
        if self.e < other.e:
            b <<= other.e - self.e
        else:
            a <<= self.e - other.e
        return (a > b) - (a < b)

    def __eq__(self, other):
        if isinstance(other, Dyadic):
            return self.m == other.m and self.e == other.e
        if isinstance(other, int):
            return self == Dyadic(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.m, self.e))

    def __lt__(self, other):
        if not isinstance(other, (Dyadic, int)):
            return NotImplemented
        return self._cmp(other) < 0

    def __le__(self, other):
        if not isinstance(other, (Dyadic, int)):
            return NotImplemented
        return self._cmp(other) <= 0

    def __gt__(self, other):
        if not isinstance(other, (Dyadic, int)):
            return NotImplemented
        return self._cmp(other) > 0

    def __ge__(self, other):
        if not isinstance(other, (Dyadic, int)):
            return NotImplemented
        return self._cmp(other) >= 0


_POW2_RE = re.compile(r"([+-]?\d+)\s*\*\s*2\^\(?([+-]?\d+)\)?")
_DECIMAL_RE = re.compile(r"[+-]?(\d+(\.\d*)?|\.\d+)")

ZERO = Dyadic(0)
ONE = Dyadic(1)


def pow2(k: int) -> Dyadic:
    return Dyadic(1, k)


def dy_add(a: Dyadic, b: Dyadic) -> Dyadic:
    return a + b


def dy_sub(a: Dyadic, b: Dyadic) -> Dyadic:
    return a - b


def dy_neg(a: Dyadic) -> Dyadic:
    return -a


def dy_abs(a: Dyadic) -> Dyadic:
    return abs(a)


def dy_cmp(a: Dyadic, b: Dyadic) -> int:
    return a._cmp(b)


def msb_exponent(x: Dyadic) -> int:
    """floor(log2(|x|)) for nonzero ``x``."""
    if x.m == 0:
        raise ZeroInput("msb_exponent of zero")
    return x.e + abs(x.m).bit_length() - 1


class Special(enum.Enum):
    """Non-finite points of the closed extended reals."""

    POS_INF = "+inf"
    NEG_INF = "-inf"
    NAN = "nan"

    def __repr__(self):
        return self.name


POS_INF = Special.POS_INF
NEG_INF = Special.NEG_INF
NAN = Special.NAN

XReal = Union[Dyadic, Special]


def is_finite(x: XReal) -> bool:
    return isinstance(x, Dyadic)


def xr_neg(x: XReal) -> XReal:
    if x is POS_INF:
        return NEG_INF
    if x is NEG_INF:
        return POS_INF
    if x is NAN:
        return NAN
    return -x


def xr_add(a: XReal, b: XReal) -> XReal:
    if a is NAN or b is NAN:
        return NAN
    if isinstance(a, Dyadic) and isinstance(b, Dyadic):
        return a + b
    if isinstance(a, Dyadic):
        return b
    if isinstance(b, Dyadic):
        return a
    return a if a is b else NAN


def xr_sub(a: XReal, b: XReal) -> XReal:
    return xr_add(a, xr_neg(b))


def xr_str(x: XReal) -> str:
    if isinstance(x, Dyadic):
        return x.decimal()
    return x.value


def xr_parse(text: str) -> XReal:
    t = text.strip().lower()
    if t in ("inf", "+inf", "infinity", "+infinity"):
        return POS_INF
    if t in ("-inf", "-infinity"):
        return NEG_INF
    if t == "nan":
        return NAN
    return Dyadic.parse(text)
