"""P3109 format descriptors and their derived constants."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import cached_property

from .numerics import Dyadic


class ConstraintViolation(ValueError):
    pass


class Signedness(enum.Enum):
    SIGNED = "signed"
    UNSIGNED = "unsigned"


class Domain(enum.Enum):
    FINITE = "finite"
    EXTENDED = "extended"


@dataclass(frozen=True)
class DerivedConstants:
    B: int
    W: int
    emin: int
    emax: int
    emin_lsb: int
    emax_lsb: int
    n_fmax: int
    M_hi: Dyadic
    M_lo: Dyadic


@dataclass(frozen=True)
class Format:
    K: int
    P: int
    s: Signedness
    d: Domain

    def __post_init__(self):
        K, P = self.K, self.P
        if not isinstance(K, int) or not isinstance(P, int):
            raise ConstraintViolation("K and P must be integers")
        if not isinstance(self.s, Signedness) or not isinstance(self.d, Domain):
            raise ConstraintViolation("s must be a Signedness and d a Domain")
        if K <= 2:
            raise ConstraintViolation(f"K > 2 required (got K={K})")
        if P <= 0:
            raise ConstraintViolation(f"P > 0 required (got P={P})")
        if self.s is Signedness.SIGNED and P >= K:
            raise ConstraintViolation(f"signed formats need P < K (got K={K}, P={P})")
        if self.s is Signedness.UNSIGNED and P > K:
            raise ConstraintViolation(f"unsigned formats need P <= K (got K={K}, P={P})")

    @property
    def signed(self) -> bool:
        return self.s is Signedness.SIGNED

    @property
    def extended(self) -> bool:
        return self.d is Domain.EXTENDED

    @property
    def name(self) -> str:
        return f"{self.K}p{self.P}{'s' if self.signed else 'u'}{'e' if self.extended else 'f'}"

    def __str__(self):
        return self.name

    def __repr__(self):
        return f"Format({self.name})"

    # derived constants

    @property
    def W(self) -> int:
        return self.K - self.P if self.signed else self.K - self.P + 1

    @property
    def B(self) -> int:
        return 1 << (self.W - 1)

    bias = B

    @property
    def emin(self) -> int:
        return 1 - self.B

    @property
    def emin_lsb(self) -> int:
        return self.emin - self.P + 1

    @cached_property
    def emax(self) -> int:
        W, B, P = self.W, self.B, self.P
        if self.signed:
            if self.extended and P == 1:
                return (1 << W) - 2 - B
        elif self.extended:
            if P == 1:
                return (1 << W) - 3 - B
            if P == 2:
                return (1 << W) - 2 - B
        elif P == 1:
            return (1 << W) - 2 - B
        return (1 << W) - 1 - B

    @property
    def emax_lsb(self) -> int:
        return self.emax - self.P + 1

    @property
    def n_fmax(self) -> int:
        K = self.K
        if self.signed:
            return (1 << (K - 1)) - (2 if self.extended else 1)
        return (1 << K) - (3 if self.extended else 2)

    @cached_property
    def M_hi(self) -> Dyadic:
        # n_fmax always lands in a normal binade, so the implicit bit is set
        half = 1 << (self.P - 1)
        n = self.n_fmax
        m = (n % half) + half
        return Dyadic(m, n // half - self.B - self.P + 1)

    @property
    def M_lo(self) -> Dyadic:
        return -self.M_hi if self.signed else Dyadic(0)

    # reserved encodings (bit patterns)

    @property
    def nan_code(self) -> int:
        return 1 << (self.K - 1) if self.signed else (1 << self.K) - 1

    @property
    def pos_inf_code(self):
        if not self.extended:
            return None
        return (1 << (self.K - 1)) - 1 if self.signed else (1 << self.K) - 2

    @property
    def neg_inf_code(self):
        if not (self.extended and self.signed):
            return None
        return (1 << self.K) - 1

    def reserved_codes(self) -> dict:
        codes = {"nan": self.nan_code}
        if self.pos_inf_code is not None:
            codes["+inf"] = self.pos_inf_code
        if self.neg_inf_code is not None:
            codes["-inf"] = self.neg_inf_code
        return codes

    def to_json(self) -> dict:
        return {"K": self.K, "P": self.P, "signed": self.signed, "extended": self.extended}

    @classmethod
    def from_json(cls, obj: dict) -> "Format":
        return make_format(
            obj["K"],
            obj["P"],
            Signedness.SIGNED if obj["signed"] else Signedness.UNSIGNED,
            Domain.EXTENDED if obj["extended"] else Domain.FINITE,
        )


def make_format(K: int, P: int, s: Signedness, d: Domain) -> Format:
    return Format(K, P, s, d)


def derive(f: Format) -> DerivedConstants:
    return DerivedConstants(
        B=f.B,
        W=f.W,
        emin=f.emin,
        emax=f.emax,
        emin_lsb=f.emin_lsb,
        emax_lsb=f.emax_lsb,
        n_fmax=f.n_fmax,
        M_hi=f.M_hi,
        M_lo=f.M_lo,
    )


_FORMAT_RE = re.compile(r"(\d+)p(\d+)([su])([fe])")


def parse_format(text: str) -> Format:
    """Parse the compact ``<K>p<P><s|u><f|e>`` syntax, e.g. ``8p4se``."""
    hit = _FORMAT_RE.fullmatch(text.strip().lower())
    if not hit:
        raise ValueError(f"bad format string {text!r}; expected <K>p<P><s|u><f|e>")
    K, P, s, d = hit.groups()
    return make_format(
        int(K),
        int(P),
        Signedness.SIGNED if s == "s" else Signedness.UNSIGNED,
        Domain.EXTENDED if d == "e" else Domain.FINITE,
    )


def all_formats(kmin: int = 3, kmax: int = 8, *, signed=None):
    """Every legal format with ``kmin <= K <= kmax``, in a stable order."""
    out = []
    for K in range(max(kmin, 3), kmax + 1):
        for s in Signedness:
            if signed is not None and (s is Signedness.SIGNED) != signed:
                continue
            top = K - 1 if s is Signedness.SIGNED else K
            for P in range(1, top + 1):
                for d in Domain:
                    out.append(Format(K, P, s, d))
    return out
