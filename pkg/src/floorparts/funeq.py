"""Grid checks of functional equations and the uniqueness harnesses.

Each equation is written once as a builder ``(f, ctx, *vars) -> (lhs, rhs)``.
The builder runs either on Fractions (the exact reference path) or on int64
arrays of scaled values through a compiled kernel.  Both paths enumerate
tuples in the same lexicographic order and report the same first failure.

Free variables range over the grid; compound arguments such as
``f*(x) + f(y)`` are evaluated wherever they land.  Passing every grid tuple
of a claim quantified over the whole line proves nothing, so such passes are
``Verdict.UNKNOWN`` and only failures are definite.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, lcm
from typing import Callable, Optional, Sequence, Union

import numpy as np

from . import kernels
from . import partfn as pf
from .exactnum import format_rational, is_integer
from .grid import GridSpec
from .report import CheckReport, Verdict, Witness
from .setalg import (INTEGERS, Lattice, RatInterval, SymbolicSet, membership, to_dsl,
                     unit_integer_projection, unit_transversal_projection)


class Equation(str, enum.Enum):
    DECOMPOSER = "decomposer"
    STRONG_DECOMPOSER = "strong_decomposer"
    CANCELER = "canceler"
    ASSOCIATIVE = "associative"
    MULTIPLICATIVE_SYMMETRIC = "multiplicative_symmetric"
    PERIODIC1 = "periodic1"
    COPERIODIC1 = "coperiodic1"


@dataclass(frozen=True)
class EisenbergShift:
    ks: tuple[int, ...]

    def __post_init__(self):
        if not self.ks:
            raise ValueError("EisenbergShift needs at least one k")
        object.__setattr__(self, "ks", tuple(int(k) for k in self.ks))

    @property
    def value(self) -> str:
        return "eisenberg_shift"


@dataclass(frozen=True)
class EisenbergDivision:
    ns: tuple[int, ...]

    def __post_init__(self):
        if not self.ns or any(int(n) < 1 for n in self.ns):
            raise ValueError("EisenbergDivision needs a nonempty set of positive integers")
        object.__setattr__(self, "ns", tuple(int(n) for n in self.ns))

    @property
    def value(self) -> str:
        return "eisenberg_division"


EquationKind = Union[Equation, EisenbergShift, EisenbergDivision]


# -- equation builders -------------------------------------------------------

def _decomposer(f, c, x, y):
    return f(x - f(x) + f(y)), f(y)


def _strong_decomposer(f, c, x, y):
    return f(x - f(x) + y), f(y)


def _canceler(f, c, x, y):
    return f(f(x) + y), f(x + y)


def _associative(f, c, x, y, z):
    return f(f(x + y) + z), f(f(x) + f(y + z))


def _mult_symmetric(f, c, x, y):
    return f(f(x) + y), f(x + f(y))


def _periodic1(f, c, x):
    return f(x + c.const(1)), f(x)


def _coperiodic1(f, c, x):
    one = c.const(1)
    return f(x + one), f(x) + one


def _eisenberg_shift(f, c, x, k):
    return f(x + c.const(k)), f(x) + c.const(k)


def _eisenberg_division(f, c, x, n):
    return f(c.div(f(x * n), n)), f(x)


_BUILDERS: dict[Equation, tuple[tuple[str, ...], Callable]] = {
    Equation.DECOMPOSER: (("x", "y"), _decomposer),
    Equation.STRONG_DECOMPOSER: (("x", "y"), _strong_decomposer),
    Equation.CANCELER: (("x", "y"), _canceler),
    Equation.ASSOCIATIVE: (("x", "y", "z"), _associative),
    Equation.MULTIPLICATIVE_SYMMETRIC: (("x", "y"), _mult_symmetric),
    Equation.PERIODIC1: (("x",), _periodic1),
    Equation.COPERIODIC1: (("x",), _coperiodic1),
}


@dataclass
class _Problem:
    """A claim ``lhs == rhs`` over a product of blocks of variable assignments.

    Grid variables of an exhaustive grid are one block each; a sampled grid
    contributes one block of zipped tuples.  Integer parameters (``k``, ``n``)
    form a trailing block.  ``param_vars`` names those parameter slots, which
    are passed to builders unscaled in the kernel path.
    """

    name: str
    function: pf.FunctionSpec
    grid: GridSpec
    names: tuple[str, ...]
    builder: Callable
    blocks: list[list[tuple]]
    param_vars: frozenset = frozenset()
    extra_scale: int = 1
    # optional fast path: (exact_fn, kernel_fn)
    dedup: Optional[str] = None

    @property
    def total(self) -> int:
        n = 1
        for b in self.blocks:
            n *= len(b)
        return n

    def tuple_at(self, index: int) -> tuple[Fraction, ...]:
        parts = []
        for b in reversed(self.blocks):
            index, r = divmod(index, len(b))
            parts.append(b[r])
        return tuple(v for part in reversed(parts) for v in part)


def _grid_blocks(grid: GridSpec, arity: int) -> list[list[tuple]]:
    if grid.is_exhaustive:
        pts = [(p,) for p in grid.points()]
        return [pts] * arity
    return [list(grid.tuples(arity))]


def _problem(eq: EquationKind, f: pf.FunctionSpec, grid: GridSpec) -> _Problem:
    if isinstance(eq, EisenbergShift):
        return _Problem("eisenberg_shift", f, grid, ("x", "k"), _eisenberg_shift,
                        _grid_blocks(grid, 1) + [[(Fraction(k),) for k in sorted(set(eq.ks))]],
                        param_vars=frozenset({"k"}))
    if isinstance(eq, EisenbergDivision):
        ns = sorted(set(eq.ns))
        return _Problem("eisenberg_division", f, grid, ("x", "n"), _eisenberg_division,
                        _grid_blocks(grid, 1) + [[(Fraction(n),) for n in ns]],
                        param_vars=frozenset({"n"}), extra_scale=lcm(*ns))
    names, builder = _BUILDERS[Equation(eq)]
    dedup = None
    if grid.is_exhaustive and eq in (Equation.DECOMPOSER, Equation.STRONG_DECOMPOSER):
        dedup = Equation(eq).value
    return _Problem(Equation(eq).value, f, grid, names, builder, _grid_blocks(grid, len(names)),
                    dedup=dedup)


# -- exact path ----------------------------------------------------------------

class _ExactCtx:
    @staticmethod
    def const(q):
        return Fraction(q)

    @staticmethod
    def div(v, n):
        return v / n


def _memo(f: pf.FunctionSpec) -> Callable[[Fraction], Fraction]:
    cache: dict[Fraction, Fraction] = {}

    def g(x: Fraction) -> Fraction:
        r = cache.get(x)
        if r is None:
            r = cache[x] = pf.evaluate(f, x)
        return r

    return g


def _exact_sides(p: _Problem, values: tuple[Fraction, ...], f=None):
    f = f or _memo(p.function)
    return p.builder(f, _ExactCtx, *values)


def _exact_first_failure(p: _Problem) -> Optional[int]:
    if p.dedup is not None:
        return _exact_dedup(p)
    f = _memo(p.function)
    for i, parts in enumerate(itertools.product(*p.blocks)):
        values = tuple(v for part in parts for v in part)
        lhs, rhs = p.builder(f, _ExactCtx, *values)
        if lhs != rhs:
            return i
    return None


def _exact_dedup(p: _Problem) -> Optional[int]:
    # Decomposer sides depend on x only through f*(x) and on y through f(y)
    # (strong form: through y itself), so each distinct f*(x) is scanned once.
    f = _memo(p.function)
    pts = [t[0] for t in p.blocks[0]]
    n = len(pts)
    fy = [f(y) for y in pts]
    second = fy if p.dedup == Equation.DECOMPOSER.value else pts
    seen = set()
    for i, x in enumerate(pts):
        u = x - f(x)
        if u in seen:
            continue
        memo: dict[Fraction, bool] = {}
        for j in range(n):
            v = second[j]
            ok = memo.get(v)
            if ok is None:
                ok = memo[v] = f(u + v) == fy[j]
            if not ok:
                return i * n + j
        seen.add(u)
    return None


# -- kernel path ---------------------------------------------------------------

class _Fallback(Exception):
    pass


class _Bound:
    """Magnitude bound carried through a builder to rule out int64 overflow."""

    def __init__(self, v: int):
        if v >= kernels.INT_LIMIT:
            raise _Fallback("bound exceeds the int64 budget")
        self.v = v

    @staticmethod
    def _of(o) -> int:
        return o.v if isinstance(o, _Bound) else abs(int(o))

    def __add__(self, o):
        return _Bound(self.v + self._of(o))

    __radd__ = __sub__ = __rsub__ = __add__

    def __mul__(self, o):
        return _Bound(self.v * self._of(o))

    __rmul__ = __mul__

    def __neg__(self):
        return self


class _BoundCtx:
    def __init__(self, scale: int):
        self.scale = scale

    def const(self, q):
        if isinstance(q, _Bound):
            return _Bound(q.v * self.scale)
        return _Bound(abs(int(Fraction(q) * self.scale)))

    @staticmethod
    def div(v, n):
        return v


class _ArrayCtx:
    def __init__(self, scale: int):
        self.scale = scale

    def const(self, q):
        if isinstance(q, np.ndarray):
            return q * self.scale
        v = Fraction(q) * self.scale
        if v.denominator != 1:
            raise _Fallback("constant off the scaled lattice")
        return int(v)

    @staticmethod
    def div(v, n):
        if isinstance(n, np.ndarray):
            if np.any(v % n):
                raise _Fallback("inexact division")
            return v // n
        if np.any(v % int(n)):
            raise _Fallback("inexact division")
        return v // int(n)


_CHUNK = 1 << 20


def _scaled(block: list[tuple], scale: int, params: Sequence[bool]) -> list[np.ndarray]:
    cols = []
    for j, is_param in enumerate(params):
        if is_param:
            cols.append(np.array([int(t[j]) for t in block], dtype=np.int64))
        else:
            cols.append(np.array([int(t[j] * scale) for t in block], dtype=np.int64))
    return cols


def _kernel_setup(p: _Problem):
    scale = lcm(p.grid.denominator_lcm() * p.extra_scale, kernels.required_scale(p.function))
    prog = kernels.compile_spec(p.function, scale)
    if prog is None:
        raise _Fallback("spec does not compile")

    def fb(b):
        if not isinstance(b, _Bound):
            b = _Bound(abs(int(b)))
        return _Bound(prog.bound(b.v))

    gb = _Bound(int(p.grid.range_bound * scale) + 1)
    pb = [_Bound(max(abs(int(t[0])) for t in blk)) for blk in p.blocks]
    bvals = []
    pos = 0
    for blk, b in zip(p.blocks, pb):
        for _ in range(len(blk[0])):
            bvals.append(b if p.names[pos] in p.param_vars else gb)
            pos += 1
    lhs, rhs = p.builder(fb, _BoundCtx(scale), *bvals)
    _ = lhs + rhs
    return scale, prog


def _kernel_eval(prog):
    def f(arr):
        out, ok = kernels.run(prog, arr)
        if not ok:
            raise _Fallback("mu lookup outside the table")
        return out
    return f


def _kernel_first_failure(p: _Problem) -> Optional[int]:
    scale, prog = _kernel_setup(p)
    f = _kernel_eval(prog)
    ctx = _ArrayCtx(scale)
    if p.dedup is not None:
        return _kernel_dedup(p, f, scale)
    # columns per block, in variable order
    cols_per_block = []
    pos = 0
    for blk in p.blocks:
        width = len(blk[0])
        params = [p.names[pos + j] in p.param_vars for j in range(width)]
        cols_per_block.append(_scaled(blk, scale, params))
        pos += width
    sizes = [len(b) for b in p.blocks]
    inner = 1
    for s in sizes[1:]:
        inner *= s
    step = max(1, _CHUNK // max(1, inner))
    # index arrays for the inner product, built once
    if len(sizes) > 1:
        grids = np.meshgrid(*[np.arange(s) for s in sizes[1:]], indexing="ij")
        inner_idx = [g.ravel() for g in grids]
    else:
        inner_idx = []
    for start in range(0, sizes[0], step):
        stop = min(sizes[0], start + step)
        outer = np.repeat(np.arange(start, stop), inner)
        idx = [outer] + [np.tile(ix, stop - start) for ix in inner_idx]
        values = []
        for cols, ix in zip(cols_per_block, idx):
            values.extend(c[ix] for c in cols)
        lhs, rhs = p.builder(f, ctx, *values)
        bad = np.nonzero(lhs != rhs)[0]
        if bad.size:
            return start * inner + int(bad[0])
    return None


def _kernel_dedup(p: _Problem, f, scale: int) -> Optional[int]:
    pts = [t[0] for t in p.blocks[0]]
    X = np.array([int(x * scale) for x in pts], dtype=np.int64)
    FX = f(X)
    U, inv_u = np.unique(X - FX, return_inverse=True)
    if p.dedup == Equation.DECOMPOSER.value:
        V, inv_v = np.unique(FX, return_inverse=True)
        target = V
    else:
        V, inv_v = X, np.arange(len(X))
        target = FX
    bad = np.zeros((len(U), len(V)), dtype=bool)
    rows = max(1, _CHUNK // max(1, len(V)))
    for r0 in range(0, len(U), rows):
        r1 = min(len(U), r0 + rows)
        args = (U[r0:r1, None] + V[None, :]).ravel()
        bad[r0:r1] = (f(args).reshape(r1 - r0, len(V)) != target[None, :])
    row_any = bad.any(axis=1)[inv_u]
    hits = np.nonzero(row_any)[0]
    if not hits.size:
        return None
    i = int(hits[0])
    j = int(np.nonzero(bad[inv_u[i]][inv_v])[0][0])
    return i * len(pts) + j


# -- public checks ---------------------------------------------------------------

def _run(p: _Problem) -> CheckReport:
    failure = None
    used_kernel = False
    if kernels.enabled():
        try:
            failure = _kernel_first_failure(p)
            used_kernel = True
        except _Fallback:
            used_kernel = False
    if not used_kernel:
        failure = _exact_first_failure(p)
    fdesc = pf.to_dsl(p.function)
    if failure is None:
        return CheckReport(p.name, fdesc, Verdict.UNKNOWN, p.total, p.grid,
                           notes=("no counterexample on the grid; the claim quantifies over all of R",))
    values = p.tuple_at(failure)
    lhs, rhs = _exact_sides(p, values)
    if lhs == rhs:
        raise AssertionError(f"kernel reported a failure that does not replay at {values}")
    witness = Witness(tuple(zip(p.names, values)), lhs, rhs)
    return CheckReport(p.name, fdesc, Verdict.REFUTED, failure + 1, p.grid, witness)


def check_equation(eq: EquationKind, f: pf.FunctionSpec, grid: Optional[GridSpec] = None) -> CheckReport:
    """Check ``eq`` for ``f`` at every grid tuple; the first failing tuple is the witness."""
    return _run(_problem(eq, f, grid or GridSpec()))


def check_claim(name: str, f: pf.FunctionSpec, grid: GridSpec, names: tuple[str, ...],
                builder: Callable) -> CheckReport:
    """Check a custom identity ``builder(f, ctx, *vars) -> (lhs, rhs)`` over grid tuples.

    Builders may only use ``+``, ``-``, ``f``, ``ctx.const`` and ``ctx.div``
    so the same code runs exactly and on kernels.
    """
    return _run(_Problem(name, f, grid, names, builder, _grid_blocks(grid, len(names))))


def replay(report: CheckReport, f: pf.FunctionSpec) -> tuple[Fraction, Fraction]:
    """Re-evaluate a reported equation witness through the exact evaluator.

    For a failed integer-valuedness premise the second side is ``None``.
    """
    name = report.equation
    vals = dict(report.witness.vars)
    if name == "eisenberg":
        name = report.details["identity"]
        if name == "integer_valued":
            return pf.evaluate(f, vals["x"]), None
    for eq, (names, builder) in _BUILDERS.items():
        if eq.value == name:
            return builder(_memo(f), _ExactCtx, *(vals[n] for n in names))
    if name == "eisenberg_shift":
        return _eisenberg_shift(_memo(f), _ExactCtx, vals["x"], vals["k"])
    if name == "eisenberg_division":
        return _eisenberg_division(_memo(f), _ExactCtx, vals["x"], vals["n"])
    if name == "projection_division":
        return _projection_division(_memo(f), _ExactCtx, vals["x"], vals["n"])
    raise ValueError(f"cannot replay {name!r}")


# -- range and membership conditions ---------------------------------------------

RANGE_OF_F = "f"
RANGE_OF_FSTAR = "fstar"
DEFAULT_PROBE_DENOMINATOR = 4


def _image_fn(f: pf.FunctionSpec, which: str):
    if which == RANGE_OF_F:
        return f
    if which == RANGE_OF_FSTAR:
        return pf.star(f)
    raise ValueError(f"range selector must be 'f' or 'fstar', got {which!r}")


def probe_points(target: SymbolicSet, grid: GridSpec, denominator: int = DEFAULT_PROBE_DENOMINATOR) -> list[Fraction]:
    """Members of ``target`` on ``(1/denominator)Z`` inside the middle half of the grid range."""
    half = grid.range_bound / 2
    top = floor(half * denominator)
    pts = (Fraction(k, denominator) for k in range(-top, top + 1))
    return [t for t in pts if membership(target, t)]


def check_range_condition(f: pf.FunctionSpec, grid: Optional[GridSpec], target: SymbolicSet,
                          which: str = RANGE_OF_FSTAR,
                          probe_denominator: int = DEFAULT_PROBE_DENOMINATOR) -> CheckReport:
    """Containment of the grid image of ``f`` (or ``f*``) in ``target``.

    Containment failures refute.  Onto-ness cannot be decided on a grid, so a
    passing containment is ``UNKNOWN``; ``details`` records how many probe
    points of ``target`` were hit by the image and whether it meets Z.
    """
    grid = grid or GridSpec()
    g = _image_fn(f, which)
    label = f"range({which}) in {to_dsl(target)}"
    image: dict[Fraction, Fraction] = {}
    int_hit = None
    checked = 0
    for x in grid.points():
        checked += 1
        v = pf.evaluate(g, x)
        image.setdefault(v, x)
        if int_hit is None and is_integer(v):
            int_hit = x
        if not membership(target, v):
            return CheckReport(label, pf.to_dsl(f), Verdict.REFUTED, checked, grid,
                               Witness((("x", x),), v, relation="not in", target=to_dsl(target)))
    probes = probe_points(target, grid, probe_denominator)
    missed = [t for t in probes if t not in image]
    details = {
        "image_size": len(image),
        "meets_integers": int_hit is not None,
        "probe_coverage": f"{len(probes) - len(missed)}/{len(probes)}",
        "first_missed_probe": missed[0] if missed else None,
    }
    return CheckReport(label, pf.to_dsl(f), Verdict.UNKNOWN, checked, grid, details=details,
                       notes=("containment holds on the grid; surjectivity is not decided",))


def check_intersects(f: pf.FunctionSpec, grid: Optional[GridSpec], target: SymbolicSet,
                     which: str = RANGE_OF_F) -> CheckReport:
    """Existential claim: the image of ``f`` (or ``f*``) meets ``target``.

    A grid point landing in ``target`` proves the claim (``VERIFIED``);
    finding none proves nothing (``UNKNOWN``).
    """
    grid = grid or GridSpec()
    g = _image_fn(f, which)
    label = f"range({which}) meets {to_dsl(target)}"
    checked = 0
    for x in grid.points():
        checked += 1
        v = pf.evaluate(g, x)
        if membership(target, v):
            return CheckReport(label, pf.to_dsl(f), Verdict.VERIFIED, checked, grid,
                               details={"hit_x": x, "hit_value": v})
    return CheckReport(label, pf.to_dsl(f), Verdict.UNKNOWN, checked, grid,
                       notes=("no grid image point lies in the target",))


def is_integer_valued(f: pf.FunctionSpec, grid: Optional[GridSpec] = None) -> Optional[Fraction]:
    """Return the first grid point where ``f`` is not an integer, or None."""
    for x in (grid or GridSpec()).points():
        if not is_integer(pf.evaluate(f, x)):
            return x
    return None


# -- uniqueness scans -------------------------------------------------------------

@dataclass(frozen=True)
class RangeCondition:
    target: SymbolicSet
    which: str = RANGE_OF_FSTAR
    require_cover: bool = True

    def describe(self) -> str:
        return f"range({self.which})={to_dsl(self.target)}"


@dataclass(frozen=True)
class Intersects:
    target: SymbolicSet = INTEGERS
    which: str = RANGE_OF_F

    def describe(self) -> str:
        return f"range({self.which}) meets {to_dsl(self.target)}"


@dataclass(frozen=True)
class PointValue:
    x: Fraction
    value: Fraction

    def describe(self) -> str:
        return f"f({format_rational(self.x)})={format_rational(self.value)}"


Condition = Union[Equation, EisenbergShift, EisenbergDivision, RangeCondition, Intersects, PointValue]


def describe_condition(c: Condition) -> str:
    if isinstance(c, (RangeCondition, Intersects, PointValue)):
        return c.describe()
    return c.value


@dataclass(frozen=True)
class ConditionOutcome:
    condition: str
    holds: bool
    report: CheckReport


@dataclass(frozen=True)
class ScanResult:
    function: pf.FunctionSpec
    outcomes: tuple[ConditionOutcome, ...]

    @property
    def survived(self) -> bool:
        return all(o.holds for o in self.outcomes)

    def first_failure(self) -> Optional[ConditionOutcome]:
        return next((o for o in self.outcomes if not o.holds), None)


def evaluate_condition(c: Condition, f: pf.FunctionSpec, grid: GridSpec) -> ConditionOutcome:
    if isinstance(c, RangeCondition):
        rep = check_range_condition(f, grid, c.target, c.which)
        holds = not rep.refuted
        if holds and c.require_cover:
            holds = rep.details["first_missed_probe"] is None
        return ConditionOutcome(c.describe(), holds, rep)
    if isinstance(c, Intersects):
        rep = check_intersects(f, grid, c.target, c.which)
        return ConditionOutcome(c.describe(), rep.verdict is Verdict.VERIFIED, rep)
    if isinstance(c, PointValue):
        v = pf.evaluate(f, c.x)
        if v == c.value:
            rep = CheckReport(c.describe(), pf.to_dsl(f), Verdict.VERIFIED, 1)
        else:
            rep = CheckReport(c.describe(), pf.to_dsl(f), Verdict.REFUTED, 1,
                              witness=Witness((("x", c.x),), v, c.value))
        return ConditionOutcome(c.describe(), not rep.refuted, rep)
    rep = check_equation(c, f, grid)
    return ConditionOutcome(describe_condition(c), not rep.refuted, rep)


def uniqueness_scan(candidates: Sequence[pf.FunctionSpec], conditions: Sequence[Condition],
                    grid: Optional[GridSpec] = None) -> list[ScanResult]:
    """Run every condition on every candidate; ``survivors`` filters the result.

    A universal condition holds while it is unrefuted on the grid (and, for
    range conditions, while every probe point is hit); an existential one
    holds only with a witness.
    """
    if not candidates:
        raise ValueError("candidate list must be nonempty")
    grid = grid or GridSpec()
    return [ScanResult(f, tuple(evaluate_condition(c, f, grid) for c in conditions)) for f in candidates]


def survivors(results: Sequence[ScanResult]) -> list[pf.FunctionSpec]:
    return [r.function for r in results if r.survived]


ZERO, ONE = Fraction(0), Fraction(1)


def floor_conditions() -> list[Condition]:
    """Decomposer, ``f*(R) = [0,1)`` and a range meeting Z."""
    return [Equation.DECOMPOSER, RangeCondition(RatInterval.closed_open(0, 1), RANGE_OF_FSTAR),
            Intersects(INTEGERS, RANGE_OF_F)]


def ceil_conditions() -> list[Condition]:
    return [Equation.DECOMPOSER, RangeCondition(RatInterval.open_closed(-1, 0), RANGE_OF_FSTAR),
            Intersects(INTEGERS, RANGE_OF_F)]


def frac_conditions() -> list[Condition]:
    return [Equation.DECOMPOSER, RangeCondition(RatInterval.closed_open(0, 1), RANGE_OF_F),
            Intersects(INTEGERS, RANGE_OF_FSTAR)]


def bfloor_conditions(b) -> list[Condition]:
    from .setalg import BSegment
    b = Fraction(b)
    return [Equation.DECOMPOSER, RangeCondition(BSegment(b), RANGE_OF_FSTAR),
            Intersects(Lattice(0, b), RANGE_OF_F)]


PRESETS: dict[str, Callable[[], list[Condition]]] = {
    "floor": floor_conditions,
    "ceil": ceil_conditions,
    "frac": frac_conditions,
}


def shifted_pool(family: type, extra: Sequence[pf.FunctionSpec] = ()) -> list[pf.FunctionSpec]:
    """``family(k/8)`` for ``0 <= k < 8`` followed by ``extra``."""
    return [family(Fraction(k, 8)) for k in range(8)] + list(extra)


# -- Eisenberg and unit-transversal harnesses ---------------------------------------------

def eisenberg_check(f: pf.FunctionSpec, grid: Optional[GridSpec] = None,
                    ks: Sequence[int] = (-2, -1, 0, 1, 2), ns: Sequence[int] = (1, 2, 3)) -> CheckReport:
    """``f(x+k) = f(x)+k`` and ``f(f(nx)/n) = f(x)`` for an integer-valued ``f``."""
    grid = grid or GridSpec()
    fdesc = pf.to_dsl(f)
    bad = None
    checked = 0
    for x in grid.points():
        checked += 1
        v = pf.evaluate(f, x)
        if not is_integer(v):
            bad = (x, v)
            break
    if bad is not None:
        return CheckReport("eisenberg", fdesc, Verdict.REFUTED, checked, grid,
                           Witness((("x", bad[0]),), bad[1], relation="not in", target="Z"),
                           notes=("premise fails: f is not integer-valued on the grid",),
                           details={"identity": "integer_valued"})
    total = checked
    for eq in (EisenbergShift(tuple(ks)), EisenbergDivision(tuple(ns))):
        rep = check_equation(eq, f, grid)
        total += rep.points_checked
        if rep.refuted:
            return CheckReport("eisenberg", fdesc, Verdict.REFUTED, total, grid, rep.witness,
                               notes=(f"fails {rep.equation}",), details={"identity": rep.equation})
    return CheckReport("eisenberg", fdesc, Verdict.UNKNOWN, total, grid,
                       notes=("integer-valued, shift and division identities hold on the grid",))


def _projection_division(f, c, x, n):
    return f(c.div(f(x), n)), f(c.div(x, n))


def projection_division_check(A: SymbolicSet, grid: Optional[GridSpec] = None,
                  ns: Sequence[int] = (1, 2, 3, 4), side: str = "integer") -> CheckReport:
    """Check ``P(P(x)/n) = P(x/n)`` for a projection of ``Q = Z (+) A``.

    ``side="integer"`` (default) takes ``P = P_Z``, the projection the
    Eisenberg characterization constrains; it holds exactly for
    ``A = [0,1)`` and ``A = (-1,0]`` among unit half-open intervals.
    ``side="transversal"`` takes ``P = P_A`` literally, which already fails
    for ``A = [0,1)`` (``x = 1, n = 2``).
    """
    grid = grid or GridSpec()
    if side == "integer":
        proj = unit_integer_projection(A)
    elif side == "transversal":
        proj = unit_transversal_projection(A)
    else:
        raise ValueError("side must be 'integer' or 'transversal'")
    ns = sorted(set(int(n) for n in ns))
    if not ns or ns[0] < 1:
        raise ValueError("ns must be positive integers")
    prob = _Problem("projection_division", proj, grid, ("x", "n"), _projection_division,
                    _grid_blocks(grid, 1) + [[(Fraction(n),) for n in ns]],
                    param_vars=frozenset({"n"}), extra_scale=lcm(*ns))
    rep = _run(prob)
    label = "P_Z" if side == "integer" else "P_A"
    return CheckReport(rep.equation, f"{label} for A={to_dsl(A)}: {rep.function}", rep.verdict,
                       rep.points_checked, rep.grid, rep.witness, rep.notes,
                       details={"projection": rep.function})
