"""Named real-function families, evaluated exactly on rationals.

Every family is a frozen dataclass, so specs compare structurally and
hash.  ``evaluate`` is a direct transcription of each family's formula;
no identity other than the star involution is applied symbolically.
"""
from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterator, Mapping, Optional

from .exactnum import as_rational, ceil_q, floor_q, format_rational, frac_q, parse_rational
from .grid import GridSpec
from .report import CheckReport, Verdict, Witness


class MuUndefined(LookupError):
    """A mu-table was asked for a fractional part it does not cover."""

    def __init__(self, point: Fraction):
        self.point = point
        super().__init__(f"mu is undefined at fractional part {format_rational(point)}")


class ZeroScale(ValueError):
    pass


def _check_scale(b: Fraction) -> None:
    if b == 0:
        raise ZeroScale("scale parameter b must be nonzero")


@dataclass(frozen=True)
class MuTable:
    """Finitely described ``mu: [0,1) -> Q``: explicit entries plus an optional default."""

    entries: tuple[tuple[Fraction, Fraction], ...] = ()
    default: Optional[Fraction] = None

    def __post_init__(self):
        items = tuple(sorted((as_rational(k), as_rational(v)) for k, v in self.entries))
        keys = [k for k, _ in items]
        if len(set(keys)) != len(keys):
            raise ValueError("mu table keys must be distinct")
        for k in keys:
            if not 0 <= k < 1:
                raise ValueError(f"mu table key {format_rational(k)} is outside [0,1)")
        object.__setattr__(self, "entries", items)
        if self.default is not None:
            object.__setattr__(self, "default", as_rational(self.default))

    @classmethod
    def from_mapping(cls, mapping: Mapping, default=None) -> "MuTable":
        return cls(tuple(mapping.items()), default)

    def __call__(self, t: Fraction) -> Fraction:
        keys = [k for k, _ in self.entries]
        i = bisect.bisect_left(keys, t)
        if i < len(keys) and keys[i] == t:
            return self.entries[i][1]
        if self.default is None:
            raise MuUndefined(t)
        return self.default

    def constants(self) -> Iterator[Fraction]:
        for k, v in self.entries:
            yield k
            yield v
        if self.default is not None:
            yield self.default


def load_mu_table(path) -> MuTable:
    """Read lines ``<point> <value>`` and an optional ``default <value>``; ``#`` starts a comment."""
    entries = {}
    default = None
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"{path}:{lineno}: expected two fields, got {raw!r}")
        if parts[0] == "default":
            default = parse_rational(parts[1])
            continue
        key = parse_rational(parts[0])
        if key in entries:
            raise ValueError(f"{path}:{lineno}: duplicate mu key {parts[0]}")
        entries[key] = parse_rational(parts[1])
    return MuTable.from_mapping(entries, default)


class FunctionSpec:
    """Base class of all function families."""

    __slots__ = ()

    def __post_init__(self):
        for name in ("a", "b", "c", "k"):
            if hasattr(self, name):
                object.__setattr__(self, name, as_rational(getattr(self, name)))
        if isinstance(self, _SCALED):
            _check_scale(self.b)

    def __call__(self, x) -> Fraction:
        return evaluate(self, as_rational(x))

    def __str__(self) -> str:
        return to_dsl(self)


@dataclass(frozen=True, repr=False)
class Identity(FunctionSpec):
    pass


@dataclass(frozen=True, repr=False)
class Floor(FunctionSpec):
    pass


@dataclass(frozen=True, repr=False)
class Ceil(FunctionSpec):
    pass


@dataclass(frozen=True, repr=False)
class Frac(FunctionSpec):
    pass


@dataclass(frozen=True, repr=False)
class ShiftedFloor(FunctionSpec):
    c: Fraction


@dataclass(frozen=True, repr=False)
class ShiftedCeil(FunctionSpec):
    c: Fraction


@dataclass(frozen=True, repr=False)
class ShiftedFrac(FunctionSpec):
    c: Fraction


@dataclass(frozen=True, repr=False)
class BFloor(FunctionSpec):
    b: Fraction


@dataclass(frozen=True, repr=False)
class BCeil(FunctionSpec):
    b: Fraction


@dataclass(frozen=True, repr=False)
class BFrac(FunctionSpec):
    b: Fraction


@dataclass(frozen=True, repr=False)
class ShiftedBFloor(FunctionSpec):
    b: Fraction
    c: Fraction


@dataclass(frozen=True, repr=False)
class FloorPlus(FunctionSpec):
    c: Fraction


@dataclass(frozen=True, repr=False)
class MuPeriodic(FunctionSpec):
    table: MuTable


@dataclass(frozen=True, repr=False)
class MuCoperiodic(FunctionSpec):
    table: MuTable


@dataclass(frozen=True, repr=False)
class Star(FunctionSpec):
    inner: FunctionSpec


@dataclass(frozen=True, repr=False)
class AffineConjugate(FunctionSpec):
    inner: FunctionSpec
    a: Fraction
    b: Fraction
    c: Fraction


@dataclass(frozen=True, repr=False)
class Negated(FunctionSpec):
    inner: FunctionSpec


@dataclass(frozen=True, repr=False)
class Linear(FunctionSpec):
    k: Fraction


_SCALED = (BFloor, BCeil, BFrac, ShiftedBFloor, AffineConjugate)


def _repr(self) -> str:
    return f"<{type(self).__name__} {to_dsl(self)}>"


for _cls in (Identity, Floor, Ceil, Frac, ShiftedFloor, ShiftedCeil, ShiftedFrac, BFloor, BCeil,
             BFrac, ShiftedBFloor, FloorPlus, MuPeriodic, MuCoperiodic, Star, AffineConjugate,
             Negated, Linear):
    _cls.__repr__ = _repr


def bfloor_q(x: Fraction, b: Fraction) -> Fraction:
    return b * floor_q(x / b)


def bceil_q(x: Fraction, b: Fraction) -> Fraction:
    return b * ceil_q(x / b)


def bfrac_q(x: Fraction, b: Fraction) -> Fraction:
    return x - bfloor_q(x, b)


def evaluate(f: FunctionSpec, x: Fraction) -> Fraction:
    match f:
        case Identity():
            return x
        case Floor():
            return floor_q(x)
        case Ceil():
            return ceil_q(x)
        case Frac():
            return frac_q(x)
        case ShiftedFloor(c):
            return floor_q(x - c) + c
        case ShiftedCeil(c):
            return ceil_q(x - c) + c
        case ShiftedFrac(c):
            return frac_q(x - c)
        case BFloor(b):
            return bfloor_q(x, b)
        case BCeil(b):
            return bceil_q(x, b)
        case BFrac(b):
            return bfrac_q(x, b)
        case ShiftedBFloor(b, c):
            return bfloor_q(x - c, b) + c
        case FloorPlus(c):
            return floor_q(x) + c
        case MuPeriodic(table):
            return table(frac_q(x))
        case MuCoperiodic(table):
            return floor_q(x) + table(frac_q(x))
        case Star(inner):
            return x - evaluate(inner, x)
        case AffineConjugate(inner, a, b, c):
            return b * evaluate(inner, x / b + a) + c
        case Negated(inner):
            return -evaluate(inner, -x)
        case Linear(k):
            return k * x
    raise TypeError(f"not a function spec: {f!r}")


def star(f: FunctionSpec) -> FunctionSpec:
    """``x - f(x)``; ``star(star(f))`` collapses back to ``f``."""
    if isinstance(f, Star):
        return f.inner
    return Star(f)


def transform(f: FunctionSpec, a, b, c) -> tuple[FunctionSpec, FunctionSpec]:
    """The dual pair ``b f(x/b + a) + c`` and ``x - b f(x/b + a) + c``."""
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    _check_scale(b)
    conj = AffineConjugate(f, a, b, c)
    # x - b f(x/b + a) + c  ==  star(b f(x/b + a)) + c
    dual = AffineConjugate(star(AffineConjugate(f, a, b, Fraction(0))), Fraction(0), Fraction(1), c)
    return conj, dual


def children(f: FunctionSpec) -> tuple[FunctionSpec, ...]:
    if isinstance(f, (Star, Negated, AffineConjugate)):
        return (f.inner,)
    return ()


def constants(f: FunctionSpec) -> Iterator[Fraction]:
    """Every rational parameter in ``f``, including mu-table keys and values."""
    match f:
        case ShiftedFloor(c) | ShiftedCeil(c) | ShiftedFrac(c) | FloorPlus(c):
            yield c
        case BFloor(b) | BCeil(b) | BFrac(b):
            yield b
        case ShiftedBFloor(b, c):
            yield b
            yield c
        case Linear(k):
            yield k
        case MuPeriodic(table) | MuCoperiodic(table):
            yield from table.constants()
        case AffineConjugate(inner, a, b, c):
            yield a
            yield b
            yield c
            yield from constants(inner)
        case Star(inner) | Negated(inner):
            yield from constants(inner)


_NULLARY = {Identity: "id", Floor: "floor", Ceil: "ceil", Frac: "frac"}
_UNARY_PARAM = {
    ShiftedFloor: "shifted_floor", ShiftedCeil: "shifted_ceil", ShiftedFrac: "shifted_frac",
    BFloor: "bfloor", BCeil: "bceil", BFrac: "bfrac", FloorPlus: "floor_plus", Linear: "linear",
}


def render_mu(table: MuTable) -> str:
    items = [f"{format_rational(k)}:{format_rational(v)}" for k, v in table.entries]
    if table.default is not None:
        items.append(f"default:{format_rational(table.default)}")
    return "{" + ",".join(items) + "}"


def to_dsl(f: FunctionSpec) -> str:
    """Canonical DSL text; mu tables are rendered inline."""
    fr = format_rational
    if type(f) in _NULLARY:
        return _NULLARY[type(f)]
    if type(f) in _UNARY_PARAM:
        (value,) = (getattr(f, n) for n in f.__dataclass_fields__)
        return f"{_UNARY_PARAM[type(f)]}({fr(value)})"
    match f:
        case ShiftedBFloor(b, c):
            return f"shifted_bfloor({fr(b)},{fr(c)})"
        case MuPeriodic(table):
            return "mu_periodic" + render_mu(table)
        case MuCoperiodic(table):
            return "mu_coperiodic" + render_mu(table)
        case Star(inner):
            return f"star({to_dsl(inner)})"
        case Negated(inner):
            return f"neg({to_dsl(inner)})"
        case AffineConjugate(inner, a, b, c):
            return f"conj({to_dsl(inner)},{fr(a)},{fr(b)},{fr(c)})"
    raise TypeError(f"not a function spec: {f!r}")


def equal_on_grid(f: FunctionSpec, g: FunctionSpec, grid: GridSpec) -> CheckReport:
    """Extensional comparison of two specs at every grid point."""
    checked = 0
    for x in grid.points():
        checked += 1
        fx, gx = evaluate(f, x), evaluate(g, x)
        if fx != gx:
            return CheckReport(
                equation=f"equal_to({to_dsl(g)})", function=to_dsl(f), verdict=Verdict.REFUTED,
                points_checked=checked, grid=grid, witness=Witness((("x", x),), fx, gx),
            )
    if grid.is_exhaustive:
        # The claim is equality on the grid itself, which was fully enumerated.
        verdict, notes = Verdict.VERIFIED, ()
    else:
        verdict, notes = Verdict.UNKNOWN, ("sampled grid: no counterexample found",)
    return CheckReport(equation=f"equal_to({to_dsl(g)})", function=to_dsl(f), verdict=verdict,
                       points_checked=checked, grid=grid, notes=notes)
