"""Exact integer/fractional part functions, decomposer equations and direct sums over Q."""
from .exactnum import Rational, format_rational, parse_rational
from .grid import DEFAULT_GRID, GridSpec
from .report import CheckReport, Verdict, Witness

__version__ = "0.1.0"

__all__ = ["Rational", "format_rational", "parse_rational", "GridSpec", "DEFAULT_GRID",
           "CheckReport", "Verdict", "Witness", "__version__"]
