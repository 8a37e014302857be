"""Executable reference model of P3109 low-precision binary formats."""

from .algorithms import extract_scalar, fast_two_sum, fp_add, fp_sub
from .codec import Codec, decode, decode_reference, encode_bits, enumerate_format
from .formats import Format, all_formats, make_format, parse_format
from .model import Finite, Inf, NaN, encode_value, evaluate, is_canonical, is_valid
from .numerics import NAN, NEG_INF, POS_INF, Dyadic
from .projection import OVF_INF, SAT_FINITE, SAT_PROPAGATE, ProjectionSpec, SatMode, project
from .rounding import RD, RNE, RO, RU, RZ, SR, RoundingMode, parse_mode, round_to_precision

__version__ = "0.1.0"

__all__ = [
    "NAN",
    "NEG_INF",
    "OVF_INF",
    "POS_INF",
    "RD",
    "RNE",
    "RO",
    "RU",
    "RZ",
    "SAT_FINITE",
    "SAT_PROPAGATE",
    "SR",
    "Codec",
    "Dyadic",
    "Finite",
    "Format",
    "Inf",
    "NaN",
    "ProjectionSpec",
    "RoundingMode",
    "SatMode",
    "all_formats",
    "decode",
    "decode_reference",
    "encode_bits",
    "encode_value",
    "enumerate_format",
    "evaluate",
    "extract_scalar",
    "fast_two_sum",
    "fp_add",
    "fp_sub",
    "is_canonical",
    "is_valid",
    "make_format",
    "parse_format",
    "parse_mode",
    "project",
    "round_to_precision",
]
