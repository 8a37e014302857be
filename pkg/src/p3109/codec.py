"""Bit-level codec: integer encodings <-> algebraic values.

:class:`Codec` carries the three layout constants (NaN slot, +infinity
slot, exponent bias) explicitly so the verification harness can perturb
one of them and confirm that its suites notice.
"""

from __future__ import annotations

from functools import lru_cache

from .formats import Format
from .model import Finite, Inf, NaN, Value, check_value, evaluate, negate

MUTATIONS = ("nan-slot", "inf-slot", "bias")

MAX_ENUMERATE_K = 16


class OutOfRange(ValueError):
    pass


class FormatTooLarge(ValueError):
    pass


class Codec:
    def __init__(self, f: Format, mutation=None):
        if mutation is not None and mutation not in MUTATIONS:
            raise ValueError(f"unknown mutation {mutation!r}; choose from {MUTATIONS}")
        self.f = f
        self.mutation = mutation
        self.nan_slot = f.nan_code
        self.pos_inf_slot = f.pos_inf_code
        self.neg_inf_slot = f.neg_inf_code
        self.bias = f.B
        if mutation == "nan-slot":
            self.nan_slot ^= 1
        elif mutation == "inf-slot":
            if self.pos_inf_slot is not None:
                self.pos_inf_slot ^= 1
        elif mutation == "bias":
            self.bias += 1
        self._half = 1 << (f.P - 1)
        self._sign_bit = 1 << (f.K - 1)

    def _check_range(self, n: int):
        if not 0 <= n < (1 << self.f.K):
            raise OutOfRange(f"encoding {n} outside [0, 2^{self.f.K})")

    def decode_fin(self, n: int) -> Finite:
        E_raw, T = divmod(n, self._half)
        if E_raw == 0:
            return Finite(T, self.f.emin_lsb)
        return Finite(T + self._half, E_raw - self.bias - self.f.P + 1)

    def decode(self, n: int) -> Value:
        self._check_range(n)
        f = self.f
        if f.signed:
            if n == self.nan_slot:
                return NaN()
            if f.extended and n == self.pos_inf_slot:
                return Inf(False)
            if f.extended and n == self.neg_inf_slot:
                return Inf(True)
            if n < self._sign_bit:
                return self.decode_fin(n)
            return negate(self.decode_fin(n - self._sign_bit))
        if n == self.nan_slot:
            return NaN()
        if f.extended and n == self.pos_inf_slot:
            return Inf(False)
        return self.decode_fin(n)

    def encode_bits(self, v: Value) -> int:
        f = self.f
        check_value(f, v)
        if isinstance(v, NaN):
            return self.nan_slot
        if isinstance(v, Inf):
            return self.neg_inf_slot if v.negative else self.pos_inf_slot
        a = abs(v.m)
        if a < self._half:
            n = a
        else:
            n = (a - self._half) + (v.e + f.P - 1 + self.bias) * self._half
        if v.m < 0:
            n += self._sign_bit
        return n


@lru_cache(maxsize=None)
def codec_for(f: Format, mutation=None) -> Codec:
    return Codec(f, mutation)


def decode(f: Format, n: int) -> Value:
    return codec_for(f).decode(n)


def decode_fin(f: Format, n: int) -> Finite:
    return codec_for(f).decode_fin(n)


def encode_bits(f: Format, v: Value) -> int:
    return codec_for(f).encode_bits(v)


def decode_reference(f: Format, n: int) -> Value:
    """Decode from the field-level description of the encoding.

    Kept structurally separate from :class:`Codec`: specials come from a
    lookup table, the sign is a bit test, and subnormals use the
    "effective exponent field is at least one" rule.
    """
    K, P = f.K, f.P
    if not 0 <= n < 2**K:
        raise OutOfRange(f"encoding {n} outside [0, 2^{K})")
    specials = {}
    if f.signed:
        specials[2 ** (K - 1)] = NaN()
        if f.extended:
            specials[2 ** (K - 1) - 1] = Inf(False)
            specials[2**K - 1] = Inf(True)
    else:
        specials[2**K - 1] = NaN()
        if f.extended:
            specials[2**K - 2] = Inf(False)
    if n in specials:
        return specials[n]

    if f.signed:
        negative = (n >> (K - 1)) & 1 == 1
        body = n & (2 ** (K - 1) - 1)
        exp_bits = K - P
    else:
        negative = False
        body = n
        exp_bits = K - P + 1
    bias = 2 ** (exp_bits - 1)
    trailing_bits = P - 1
    field = body >> trailing_bits
    trailing = body & (2**trailing_bits - 1)
    implicit = 0 if field == 0 else 2**trailing_bits
    significand = implicit + trailing
    # LSB exponent: subnormals share the exponent of field value 1
    exponent = max(field, 1) - bias - trailing_bits
    return Finite(-significand if negative else significand, exponent)


def enumerate_format(f: Format, mutation=None):
    """All ``2**K`` rows ``(encoding, value, xreal)`` in encoding order."""
    if f.K > MAX_ENUMERATE_K:
        raise FormatTooLarge(f"refusing to enumerate 2^{f.K} encodings")
    c = codec_for(f, mutation)
    rows = []
    for n in range(1 << f.K):
        v = c.decode(n)
        rows.append((n, v, evaluate(f, v)))
    return rows
