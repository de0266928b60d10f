"""Exact rational scalars and the three primitive part functions.

``Rational`` is :class:`fractions.Fraction`: always reduced, positive
denominator, exact comparison.  The helpers here add the literal grammar
used on the command line and floor/ceil/frac that never touch floats.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import lcm
from typing import Iterable, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

__all__ = [
    "Rational",
    "DivisionByZero",
    "RationalParseError",
    "as_rational",
    "parse_rational",
    "format_rational",
    "add",
    "sub",
    "mul",
    "div",
    "floor_q",
    "ceil_q",
    "frac_q",
    "is_integer",
    "common_denominator",
]

_LITERAL = re.compile(r"[+-]?\d+(?:/\d+)?")


class DivisionByZero(ZeroDivisionError):
    pass


class RationalParseError(ValueError):
    def __init__(self, text: str, position: int = 0, reason: str = "malformed rational literal"):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"{reason} at position {position}: {text!r}")


def parse_rational(text: str) -> Fraction:
    """Parse ``[sign]digits[/digits]`` with a nonzero denominator."""
    s = text.strip()
    if not _LITERAL.fullmatch(s):
        raise RationalParseError(text)
    num, _, den = s.partition("/")
    if den and int(den) == 0:
        raise RationalParseError(text, s.index("/") + 1, "zero denominator")
    return Fraction(int(num), int(den) if den else 1)


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def add(x: Fraction, y: Fraction) -> Fraction:
    return x + y


def sub(x: Fraction, y: Fraction) -> Fraction:
    return x - y


def mul(x: Fraction, y: Fraction) -> Fraction:
    return x * y


def div(x: Fraction, y: Fraction) -> Fraction:
    if y == 0:
        raise DivisionByZero(f"division of {format_rational(x)} by zero")
    return x / y


def floor_q(x: Fraction) -> Fraction:
    # Python's // on ints rounds toward -inf, which is exactly floor.
    return Fraction(x.numerator // x.denominator)


def ceil_q(x: Fraction) -> Fraction:
    return Fraction(-(-x.numerator // x.denominator))


def frac_q(x: Fraction) -> Fraction:
    return x - floor_q(x)


def is_integer(x: Fraction) -> bool:
    return x.denominator == 1


def common_denominator(values: Iterable[Fraction]) -> int:
    out = 1
    for v in values:
        out = lcm(out, v.denominator)
    return out
