"""b-parts as arithmetic: generalized division and addition modulo a rational b."""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import partfn as pf
from .exactnum import as_rational, floor_q, format_rational
from .funeq import check_claim
from .grid import GridSpec
from .report import CheckReport, Verdict, Witness
from .setalg import BSegment, membership


class NotInBSegment(ValueError):
    pass


@dataclass(frozen=True)
class BContext:
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "b", as_rational(self.b))
        if self.b == 0:
            raise pf.ZeroScale("modulus b must be nonzero")

    @property
    def segment(self) -> BSegment:
        return BSegment(self.b)

    @property
    def frac(self) -> pf.BFrac:
        return pf.BFrac(self.b)


def gdiv(a, ctx: BContext) -> tuple[Fraction, Fraction]:
    """``a = b*floor(a/b) + r`` with ``r`` in ``b[0,1)``."""
    a = as_rational(a)
    q = ctx.b * floor_q(a / ctx.b)
    return q, a - q


def bsem_add(x, y, ctx: BContext) -> Fraction:
    s = as_rational(x) + as_rational(y)
    return s - ctx.b * floor_q(s / ctx.b)


def bsem_inverse(x, ctx: BContext) -> Fraction:
    x = as_rational(x)
    if not membership(ctx.segment, x):
        raise NotInBSegment(f"{format_rational(x)} is not in b[0,1) for b={format_rational(ctx.b)}")
    return bsem_add(-x, 0, ctx)


class Axiom(str, enum.Enum):
    ASSOCIATIVITY = "associativity"
    IDENTITY = "identity"
    INVERSE = "inverse"
    CLOSURE = "closure"
    IDEAL = "ideal"


def _assoc(f, c, x, y, z):
    return f(f(x + y) + z), f(x + f(y + z))


def _label(ctx: BContext) -> str:
    return f"+_b with b={format_rational(ctx.b)}"


def axiom_check(which: Axiom, ctx: BContext, grid: Optional[GridSpec] = None) -> CheckReport:
    """Axioms of ``(Q, +_b)`` and of its subgroup ``(b[0,1) & Q, +_b)`` on grid points.

    Identity and inverse run over grid points inside ``b[0,1)``; closure and
    ideal run over grid pairs, keeping those whose members lie where the
    axiom asks for them.
    """
    grid = grid or GridSpec()
    which = Axiom(which)
    if which is Axiom.ASSOCIATIVITY:
        rep = check_claim("associativity", ctx.frac, grid, ("x", "y", "z"), _assoc)
        return CheckReport(rep.equation, _label(ctx), rep.verdict, rep.points_checked, grid,
                           rep.witness, rep.notes)
    seg = ctx.segment
    inside = [x for x in grid.points() if membership(seg, x)]
    zero = Fraction(0)
    checked = 0

    def refuted(vars_, lhs, rhs=None, relation="!="):
        target = f"b[0,1) for b={format_rational(ctx.b)}" if relation == "not in" else None
        return CheckReport(which.value, _label(ctx), Verdict.REFUTED, checked, grid,
                           Witness(vars_, lhs, rhs, relation, target))

    if which is Axiom.IDENTITY:
        for x in inside:
            checked += 1
            for lhs in (bsem_add(x, zero, ctx), bsem_add(zero, x, ctx)):
                if lhs != x:
                    return refuted((("x", x),), lhs, x)
    elif which is Axiom.INVERSE:
        for x in inside:
            checked += 1
            y = bsem_inverse(x, ctx)
            if not membership(seg, y):
                return refuted((("x", x),), y, relation="not in")
            for lhs in (bsem_add(x, y, ctx), bsem_add(y, x, ctx)):
                if lhs != zero:
                    return refuted((("x", x), ("y", y)), lhs, zero)
    else:
        both = which is Axiom.CLOSURE
        if grid.is_exhaustive:
            pairs = itertools.product(inside if both else grid.points(), inside)
        else:
            pairs = ((x, y) for x, y in grid.tuples(2)
                     if membership(seg, y) and (not both or membership(seg, x)))
        for x, y in pairs:
            checked += 1
            s = bsem_add(x, y, ctx)
            if not membership(seg, s):
                return refuted((("x", x), ("y", y)), s, relation="not in")
    return CheckReport(which.value, _label(ctx), Verdict.UNKNOWN, checked, grid,
                       notes=("no counterexample on the grid",))


def maximality_probe(ctx: BContext, grid: Optional[GridSpec] = None) -> CheckReport:
    """Every grid point outside ``b[0,1)`` fails to be fixed by ``+_b 0``.

    So no subgroup of ``(Q, +_b)`` with identity 0 can contain such a point.
    The claim is about the listed grid points, hence Verified on an
    exhaustive grid.
    """
    grid = grid or GridSpec()
    seg = ctx.segment
    checked = 0
    for x in grid.points():
        if membership(seg, x):
            continue
        checked += 1
        if bsem_add(x, 0, ctx) == x:
            return CheckReport("maximality", _label(ctx), Verdict.REFUTED, checked, grid,
                               Witness((("x", x),), x, bsem_add(x, 0, ctx)))
    verdict = Verdict.VERIFIED if grid.is_exhaustive else Verdict.UNKNOWN
    return CheckReport("maximality", _label(ctx), verdict, checked, grid)
