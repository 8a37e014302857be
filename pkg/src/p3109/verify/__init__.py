"""Exhaustive checks of the format, codec, rounding and algorithm properties."""

from .lattice import ValueLattice, lattice_for, midpoint_lattice, unbounded_grid
from .report import Report
from .suites import REQUIRED_SUITES, SUITES, missing_suites, run_all, run_suite
from .sweep import Sweeper

__all__ = [
    "REQUIRED_SUITES",
    "SUITES",
    "Report",
    "Sweeper",
    "ValueLattice",
    "lattice_for",
    "midpoint_lattice",
    "missing_suites",
    "run_all",
    "run_suite",
    "unbounded_grid",
]
