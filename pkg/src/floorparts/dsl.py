"""Recursive-descent parsers for the rational, function and set literals.

Every parser consumes the whole input and raises :class:`ParseError` with the
offending position and the production it expected.  Rendering lives next to
the types (``partfn.to_dsl`` and ``setalg.to_dsl``); parsing their output
gives back an equal value.
"""
from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional

from . import partfn as pf
from . import setalg as sa

__all__ = ["ParseError", "parse_rational", "parse_function", "parse_set", "parse_interval",
           "render_function", "render_set"]

render_function = pf.to_dsl
render_set = sa.to_dsl

_RAT = re.compile(r"[+-]?\d+(?:/\d+)?")
_NAME = re.compile(r"[a-z_]+")


class ParseError(ValueError):
    def __init__(self, text: str, position: int, expected: str):
        self.text = text
        self.position = position
        self.expected = expected
        super().__init__(f"expected {expected} at position {position} in {text!r}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, expected: str, pos: Optional[int] = None):
        raise ParseError(self.text, self.pos if pos is None else pos, expected)

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.ws()
        return self.text[self.pos:self.pos + 1]

    def eat(self, ch: str):
        if self.peek() != ch:
            self.fail(repr(ch))
        self.pos += 1

    def maybe(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def match(self, rx: re.Pattern, expected: str) -> str:
        self.ws()
        m = rx.match(self.text, self.pos)
        if not m:
            self.fail(expected)
        self.pos = m.end()
        return m.group()

    def rational(self) -> Fraction:
        start = self.pos
        tok = self.match(_RAT, "rational literal")
        num, _, den = tok.partition("/")
        if den and int(den) == 0:
            self.fail("nonzero denominator", start + tok.index("/") + 1)
        return Fraction(int(num), int(den) if den else 1)

    def end(self):
        self.ws()
        if self.pos != len(self.text):
            self.fail("end of input")

    def rational_list(self, close: str) -> list[Fraction]:
        out = []
        if self.maybe(close):
            return out
        out.append(self.rational())
        while self.maybe(","):
            out.append(self.rational())
        self.eat(close)
        return out


def _run(text: str, rule: Callable[[_Parser], object]):
    p = _Parser(text)
    value = rule(p)
    p.end()
    return value


def parse_rational(text: str) -> Fraction:
    return _run(text, _Parser.rational)


# functions

_NULLARY = {"id": pf.Identity, "floor": pf.Floor, "ceil": pf.Ceil, "frac": pf.Frac}
_PARAM = {
    "shifted_floor": (pf.ShiftedFloor, 1), "shifted_ceil": (pf.ShiftedCeil, 1),
    "shifted_frac": (pf.ShiftedFrac, 1), "bfloor": (pf.BFloor, 1), "bceil": (pf.BCeil, 1),
    "bfrac": (pf.BFrac, 1), "floor_plus": (pf.FloorPlus, 1), "linear": (pf.Linear, 1),
    "shifted_bfloor": (pf.ShiftedBFloor, 2),
}
_MU = {"mu_periodic": pf.MuPeriodic, "mu_coperiodic": pf.MuCoperiodic}
FUNCTION_GRAMMAR = ("id | floor | ceil | frac | shifted_floor(c) | shifted_ceil(c) | shifted_frac(c) | "
                    "bfloor(b) | bceil(b) | bfrac(b) | shifted_bfloor(b,c) | floor_plus(c) | linear(k) | "
                    "star(F) | neg(F) | conj(F,a,b,c) | mu_periodic[(file)|{k:v,...}] | "
                    "mu_coperiodic[(file)|{k:v,...}]")


class _FunctionParser(_Parser):
    def __init__(self, text, mu_table, loader):
        super().__init__(text)
        self.mu_table = mu_table
        self.loader = loader

    def function(self) -> pf.FunctionSpec:
        start = self.pos
        name = self.match(_NAME, "function name")
        try:
            if name in _NULLARY:
                return _NULLARY[name]()
            if name in _PARAM:
                cls, arity = _PARAM[name]
                self.eat("(")
                args = [self.rational()]
                for _ in range(arity - 1):
                    self.eat(",")
                    args.append(self.rational())
                self.eat(")")
                return cls(*args)
            if name in ("star", "neg"):
                self.eat("(")
                inner = self.function()
                self.eat(")")
                return pf.Star(inner) if name == "star" else pf.Negated(inner)
            if name == "conj":
                self.eat("(")
                inner = self.function()
                args = []
                for _ in range(3):
                    self.eat(",")
                    args.append(self.rational())
                self.eat(")")
                return pf.AffineConjugate(inner, *args)
            if name in _MU:
                return _MU[name](self.mu())
        except (pf.ZeroScale, ValueError) as e:
            if isinstance(e, ParseError):
                raise
            raise ParseError(self.text, start, f"valid parameters for {name} ({e})") from e
        self.fail(FUNCTION_GRAMMAR, start)

    def mu(self) -> pf.MuTable:
        if self.maybe("{"):
            entries, default = [], None
            if not self.maybe("}"):
                while True:
                    self.ws()
                    if self.text.startswith("default", self.pos):
                        self.pos += len("default")
                        self.eat(":")
                        default = self.rational()
                    else:
                        k = self.rational()
                        self.eat(":")
                        entries.append((k, self.rational()))
                    if not self.maybe(","):
                        break
                self.eat("}")
            return pf.MuTable(tuple(entries), default)
        if self.maybe("("):
            start = self.pos
            close = self.text.find(")", start)
            if close < 0:
                self.fail("')'")
            path = self.text[start:close].strip()
            if not path:
                self.fail("mu table file name")
            self.pos = close + 1
            try:
                return self.loader(path)
            except (OSError, ValueError) as e:
                raise ParseError(self.text, start, f"readable mu table file ({e})") from e
        if self.mu_table is None:
            self.fail("'{' or '(' (no --mu-file given)")
        return self.mu_table


def parse_function(text: str, mu_table: Optional[pf.MuTable] = None,
                   loader: Callable[[str], pf.MuTable] = pf.load_mu_table,
                   base_dir: Optional[Path] = None) -> pf.FunctionSpec:
    """Parse a function literal.

    A bare ``mu_periodic`` / ``mu_coperiodic`` takes ``mu_table``; the
    ``(file)`` form is read with ``loader`` relative to ``base_dir``.
    """
    if base_dir is not None:
        base = Path(base_dir)
        inner = loader
        loader = lambda path: inner(base / path)  # noqa: E731
    p = _FunctionParser(text, mu_table, loader)
    value = p.function()
    p.end()
    return value


# sets

SET_GRAMMAR = ("finite{r,...} | lattice(c,b) | interval[lo,hi) | interval(lo,hi] | interval[lo,hi] | "
               "interval(lo,hi) | bsegment(b) | periodic{d,...}")


def _endpoint(p: _Parser, infinite: str) -> Optional[Fraction]:
    p.ws()
    for tok in ("-inf", "+inf", "inf"):
        if p.text.startswith(tok, p.pos):
            p.pos += len(tok)
            if (tok == "-inf") != (infinite == "-inf"):
                p.fail(f"rational or {infinite}", p.pos - len(tok))
            return None
    return p.rational()


def _interval_body(p: _Parser) -> sa.RatInterval:
    start = p.pos
    c = p.peek()
    if c not in "[(" or not c:
        p.fail("'[' or '('")
    p.pos += 1
    lo = _endpoint(p, "-inf")
    p.eat(",")
    hi = _endpoint(p, "inf")
    c = p.peek()
    if c not in "])" or not c:
        p.fail("']' or ')'")
    p.pos += 1
    lo_closed = p.text[start:].lstrip()[0] == "["
    if (lo is None and lo_closed) or (hi is None and c == "]"):
        p.fail("open bracket at an infinite endpoint", start if lo is None else p.pos - 1)
    try:
        return sa.RatInterval(lo, hi, lo_closed, c == "]")
    except ValueError as e:
        raise ParseError(p.text, start, f"lo <= hi ({e})") from e


def _set(p: _Parser) -> sa.SymbolicSet:
    start = p.pos
    name = p.match(_NAME, "set name")
    try:
        if name == "finite":
            p.eat("{")
            return sa.FiniteSet(frozenset(p.rational_list("}")))
        if name == "periodic":
            p.eat("{")
            return sa.PeriodicSet(frozenset(p.rational_list("}")))
        if name == "interval":
            return _interval_body(p)
        if name in ("lattice", "bsegment"):
            p.eat("(")
            args = [p.rational()]
            if name == "lattice":
                p.eat(",")
                args.append(p.rational())
            p.eat(")")
            return sa.Lattice(*args) if name == "lattice" else sa.BSegment(*args)
    except ValueError as e:
        if isinstance(e, ParseError):
            raise
        raise ParseError(p.text, start, f"valid parameters for {name} ({e})") from e
    p.fail(SET_GRAMMAR, start)


def parse_set(text: str) -> sa.SymbolicSet:
    return _run(text, _set)


def parse_interval(text: str) -> sa.RatInterval:
    """An ``interval...`` literal; the ``interval`` keyword is optional."""
    def rule(p: _Parser):
        p.ws()
        if p.text.startswith("interval", p.pos):
            p.pos += len("interval")
        return _interval_body(p)
    return _run(text, rule)
