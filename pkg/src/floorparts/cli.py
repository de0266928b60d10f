"""Command-line front end: ``floorparts <command> ...``.

``parse_args`` turns an argument vector into a typed command and ``run``
executes it, returning ``(text, structured, exit_code)``.  ``main`` glues the
two together, prints the text and writes the structured document when
``--json`` is given.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Sequence, Union

from . import bsem
from . import funeq as fe
from . import partfn as pf
from . import setalg as sa
from .dsl import ParseError, parse_function, parse_interval, parse_rational, parse_set
from .exactnum import DivisionByZero, format_rational
from .grid import DEFAULT_DENOM, DEFAULT_RANGE, GridSpec
from .report import CheckReport, Verdict

EXIT_OK, EXIT_REFUTED, EXIT_ERROR, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    exit_code = EXIT_USAGE


# -- commands ---------------------------------------------------------------------

@dataclass(frozen=True)
class Eval:
    f: pf.FunctionSpec
    xs: tuple[Fraction, ...]


@dataclass(frozen=True)
class Check:
    eq: fe.EquationKind
    f: pf.FunctionSpec
    grid: GridSpec


@dataclass(frozen=True)
class Scan:
    candidates: tuple[pf.FunctionSpec, ...]
    conditions: tuple[fe.Condition, ...]
    grid: GridSpec


@dataclass(frozen=True)
class Dsum:
    A: sa.SymbolicSet
    B: sa.SymbolicSet
    grid: GridSpec


@dataclass(frozen=True)
class Classify:
    I: sa.RatInterval
    grid: GridSpec


@dataclass(frozen=True)
class Gdiv:
    a: Fraction
    b: Fraction


@dataclass(frozen=True)
class BAdd:
    x: Fraction
    y: Fraction
    b: Fraction


@dataclass(frozen=True)
class BInv:
    x: Fraction
    b: Fraction


@dataclass(frozen=True)
class BAxioms:
    b: Fraction
    grid: GridSpec
    axioms: tuple[bsem.Axiom, ...] = tuple(bsem.Axiom)


@dataclass(frozen=True)
class Lemma34:
    A: sa.SymbolicSet
    grid: GridSpec
    ns: tuple[int, ...]
    side: str = "integer"


@dataclass(frozen=True)
class Eisenberg:
    f: pf.FunctionSpec
    grid: GridSpec
    ks: tuple[int, ...]
    ns: tuple[int, ...]


Command = Union[Eval, Check, Scan, Dsum, Classify, Gdiv, BAdd, BInv, BAxioms, Lemma34, Eisenberg]


@dataclass(frozen=True)
class Invocation:
    command: Command
    json_path: Optional[str] = None


# -- argument parsing -----------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-3/2" through as a value, like "-3"
        self._negative_number_matcher = re.compile(r"^-\d+(?:/\d+)?$|^-\d*\.\d+$")

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


_EQUATIONS = {e.value: e for e in fe.Equation}
_SCAN_POOLS = {
    "floor": lambda: fe.shifted_pool(pf.ShiftedFloor, [pf.Ceil(), pf.Frac(), pf.Linear(1), pf.Linear(Fraction(1, 2))]),
    "ceil": lambda: fe.shifted_pool(pf.ShiftedCeil, [pf.Floor(), pf.Frac(), pf.Linear(1), pf.Linear(Fraction(1, 2))]),
    "frac": lambda: fe.shifted_pool(pf.ShiftedFrac, [pf.Floor(), pf.Ceil(), pf.Linear(1), pf.Linear(Fraction(1, 2))]),
}
CONDITION_GRAMMAR = ("EQUATION | range(f|fstar)=SET | within(f|fstar)=SET | meets(f|fstar)=SET | "
                     "value(X)=V")


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _rational_arg(text: str) -> Fraction:
    return parse_rational(text)


def _grid_options() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("grid")
    g.add_argument("--grid-range", "--range", dest="grid_range", default=None, metavar="R",
                   help=f"grid points satisfy |x| <= R (default {DEFAULT_RANGE})")
    g.add_argument("--grid-denom", "--denom", dest="grid_denom", type=int, default=DEFAULT_DENOM,
                   metavar="D", help=f"largest denominator (default {DEFAULT_DENOM})")
    g.add_argument("--samples", type=int, default=None, metavar="N",
                   help="draw N seeded random tuples instead of the exhaustive grid")
    g.add_argument("--seed", type=int, default=0, metavar="S")
    return p


def _common_options() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", dest="json_path", metavar="PATH", default=None,
                   help="write the structured report to PATH ('-' for stdout)")
    p.add_argument("--mu-file", dest="mu_file", metavar="PATH", default=None,
                   help="mu table used by a bare mu_periodic / mu_coperiodic")
    return p


def build_parser() -> argparse.ArgumentParser:
    common, grid = _common_options(), _grid_options()
    parser = _Parser(prog="floorparts", description="Exact part functions, decomposer checks and "
                                                    "direct-sum factorizations over Q.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser, metavar="COMMAND")

    p = sub.add_parser("eval", parents=[common], help="evaluate a function at rationals")
    p.add_argument("f", metavar="F")
    p.add_argument("xs", metavar="X", nargs="+")

    p = sub.add_parser("check", parents=[common, grid], help="check a functional equation on a grid")
    p.add_argument("equation", choices=sorted(_EQUATIONS), metavar="EQUATION")
    p.add_argument("f", metavar="F")

    p = sub.add_parser("scan", parents=[common, grid], help="uniqueness scan over candidate functions")
    p.add_argument("candidates", metavar="F", nargs="*",
                   help="candidates (default: the preset's shifted pool)")
    p.add_argument("--preset", choices=sorted(fe.PRESETS), default=None)
    p.add_argument("--cond", action="append", default=[], metavar="COND",
                   help=f"extra condition: {CONDITION_GRAMMAR}")

    p = sub.add_parser("dsum", parents=[common, grid], help="decide whether A + B is direct")
    p.add_argument("A")
    p.add_argument("B")

    p = sub.add_parser("classify", parents=[common, grid], help="is an interval a factor of the line")
    p.add_argument("interval", metavar="I")

    for name, args, help_ in (("gdiv", ("a",), "a = multiple of b + remainder"),
                              ("badd", ("x", "y"), "x +_b y"),
                              ("binv", ("x",), "inverse in b[0,1)")):
        p = sub.add_parser(name, parents=[common], help=help_)
        for a in args:
            p.add_argument(a)
        p.add_argument("--b", required=True, metavar="B")

    p = sub.add_parser("baxioms", parents=[common, grid], help="semigroup and subgroup axioms of +_b")
    p.add_argument("--b", required=True, metavar="B")
    p.add_argument("--axiom", action="append", choices=[a.value for a in bsem.Axiom], default=None)

    p = sub.add_parser("lemma34", parents=[common, grid],
                       help="P(P(x)/n) = P(x/n) for the integer projection of Q = Z (+) A")
    p.add_argument("A")
    p.add_argument("--ns", type=_int_list, default=(1, 2, 3, 4), metavar="N,...")
    p.add_argument("--side", choices=("integer", "transversal"), default="integer")

    p = sub.add_parser("eisenberg", parents=[common, grid], help="shift and division identities")
    p.add_argument("f", metavar="F")
    p.add_argument("--ks", type=_int_list, default=(-2, -1, 0, 1, 2), metavar="K,...")
    p.add_argument("--ns", type=_int_list, default=(1, 2, 3), metavar="N,...")
    return parser


def _grid(ns: argparse.Namespace) -> GridSpec:
    r = DEFAULT_RANGE if ns.grid_range is None else parse_rational(ns.grid_range)
    try:
        if ns.samples is None:
            return GridSpec.exhaustive(r, ns.grid_denom)
        return GridSpec.sampled(ns.samples, ns.seed, r, ns.grid_denom)
    except ValueError as e:
        raise UsageError(f"invalid grid: {e}") from e


def _condition(text: str, mu: Optional[pf.MuTable]) -> fe.Condition:
    if text in _EQUATIONS:
        return _EQUATIONS[text]
    head, sep, rhs = text.partition("=")
    if not sep:
        raise UsageError(f"bad condition {text!r}; expected {CONDITION_GRAMMAR}")
    kind, _, arg = head.partition("(")
    arg = arg.rstrip(")").strip()
    if kind == "value":
        return fe.PointValue(parse_rational(arg), parse_rational(rhs))
    which = {"f": fe.RANGE_OF_F, "fstar": fe.RANGE_OF_FSTAR}.get(arg)
    if kind not in ("range", "within", "meets") or which is None:
        raise UsageError(f"bad condition {text!r}; expected {CONDITION_GRAMMAR}")
    target = parse_set(rhs)
    if kind == "meets":
        return fe.Intersects(target, which)
    return fe.RangeCondition(target, which, require_cover=kind == "range")


def _positive(values: Sequence[int], name: str) -> tuple[int, ...]:
    if not values or any(v <= 0 for v in values):
        raise UsageError(f"--{name} needs positive integers")
    return tuple(values)


def parse_args(argv: Sequence[str]) -> Invocation:
    """Build a validated command; raises UsageError or ParseError."""
    ns = build_parser().parse_args(list(argv))
    mu = pf.load_mu_table(ns.mu_file) if ns.mu_file else None
    fn = lambda text: parse_function(text, mu)  # noqa: E731
    c = ns.command
    if c == "eval":
        cmd = Eval(fn(ns.f), tuple(parse_rational(x) for x in ns.xs))
    elif c == "check":
        cmd = Check(_EQUATIONS[ns.equation], fn(ns.f), _grid(ns))
    elif c == "scan":
        if ns.preset is None and not ns.cond:
            raise UsageError("scan: give --preset and/or at least one --cond")
        if not ns.candidates and ns.preset is None:
            raise UsageError("scan: give candidate functions or a --preset")
        conds = list(fe.PRESETS[ns.preset]()) if ns.preset else []
        conds += [_condition(t, mu) for t in ns.cond]
        cands = [fn(t) for t in ns.candidates] or _SCAN_POOLS[ns.preset]()
        cmd = Scan(tuple(cands), tuple(conds), _grid(ns))
    elif c == "dsum":
        cmd = Dsum(parse_set(ns.A), parse_set(ns.B), _grid(ns))
    elif c == "classify":
        cmd = Classify(parse_interval(ns.interval), _grid(ns))
    elif c in ("gdiv", "badd", "binv"):
        b = parse_rational(ns.b)
        if b == 0:
            raise UsageError("--b must be nonzero")
        if c == "gdiv":
            cmd = Gdiv(parse_rational(ns.a), b)
        elif c == "badd":
            cmd = BAdd(parse_rational(ns.x), parse_rational(ns.y), b)
        else:
            cmd = BInv(parse_rational(ns.x), b)
    elif c == "baxioms":
        b = parse_rational(ns.b)
        if b == 0:
            raise UsageError("--b must be nonzero")
        axioms = tuple(bsem.Axiom(a) for a in ns.axiom) if ns.axiom else tuple(bsem.Axiom)
        cmd = BAxioms(b, _grid(ns), axioms)
    elif c == "lemma34":
        cmd = Lemma34(parse_set(ns.A), _grid(ns), _positive(ns.ns, "ns"), ns.side)
    else:
        cmd = Eisenberg(fn(ns.f), _grid(ns), tuple(ns.ks), _positive(ns.ns, "ns"))
    return Invocation(cmd, ns.json_path)


# -- execution ----------------------------------------------------------------------

fr = format_rational


def _reports(name: str, reports: Sequence[CheckReport], extra: Optional[dict] = None):
    code = max((r.exit_code for r in reports), default=EXIT_OK)
    text = "\n\n".join(r.to_text() for r in reports)
    doc = {"command": name, "reports": [r.to_dict() for r in reports], **(extra or {})}
    return text, doc, code


def _single(name: str, rep: CheckReport):
    doc = {"command": name, **rep.to_dict()}
    return rep.to_text(), doc, rep.exit_code


def _run_eval(cmd: Eval):
    name = pf.to_dsl(cmd.f)
    values = [pf.evaluate(cmd.f, x) for x in cmd.xs]
    stars = [x - v for x, v in zip(cmd.xs, values)]
    lines = [f"{name}({fr(x)}) = {fr(v)}" for x, v in zip(cmd.xs, values)]
    doc = {"command": "eval", "function": name,
           "values": [{"x": fr(x), "value": fr(v), "star": fr(s)}
                      for x, v, s in zip(cmd.xs, values, stars)]}
    return "\n".join(lines), doc, EXIT_OK


def _run_scan(cmd: Scan):
    results = fe.uniqueness_scan(cmd.candidates, cmd.conditions, cmd.grid)
    conds = [fe.describe_condition(c) for c in cmd.conditions]
    lines = [f"grid: {cmd.grid.describe()}", "conditions: " + "; ".join(conds)]
    rows = []
    for r in results:
        name = pf.to_dsl(r.function)
        bad = r.first_failure()
        status = "survives" if bad is None else f"fails {bad.condition}"
        if bad is not None and bad.report.witness is not None:
            status += f" ({bad.report.witness.describe()})"
        lines.append(f"{name}: {status}")
        rows.append({"function": name, "survived": r.survived,
                     "outcomes": [{"condition": o.condition, "holds": o.holds,
                                   "verdict": o.report.verdict.value,
                                   "witness": None if o.report.witness is None else o.report.witness.to_dict()}
                                  for o in r.outcomes]})
    surv = [pf.to_dsl(f) for f in fe.survivors(results)]
    lines.append("survivors: " + (", ".join(surv) if surv else "none"))
    doc = {"command": "scan", "grid": cmd.grid.to_dict(), "conditions": conds,
           "results": rows, "survivors": surv}
    return "\n".join(lines), doc, EXIT_OK


def _run_dsum(cmd: Dsum):
    v = sa.direct_sum_check(cmd.A, cmd.B, cmd.grid)
    a, b = sa.to_dsl(cmd.A), sa.to_dsl(cmd.B)
    label = {True: "direct", False: "not direct", None: "unknown (no witness found)"}[v.direct]
    lines = [f"dsum {a} + {b}: {label}", f"status: {v.status.value}"]
    if v.rule:
        lines.append(f"rule: {v.rule}")
    if v.covers_line is not None:
        lines.append(f"covers the line: {'yes' if v.covers_line else 'no'}")
    if v.witness is not None:
        lines.append(f"witness: {v.witness.describe()}")
    doc = {"command": "dsum", "A": a, "B": b, "direct": v.direct, **v.to_dict()}
    return "\n".join(lines), doc, EXIT_REFUTED if v.direct is False else EXIT_OK


def _run_classify(cmd: Classify):
    c = sa.classify_interval(cmd.I)
    lines = [f"classify {sa.to_dsl(cmd.I)}: {'factor' if c.is_factor else 'not a factor'}",
             f"reason: {c.reason.value}"]
    doc = {"command": "classify", **c.to_dict()}
    if c.is_factor:
        lines.append(f"complement: {sa.to_dsl(c.complement)}")
        p_b, p_a = c.projection_pair
        lines.append(f"projection onto complement: {pf.to_dsl(p_b)}")
        lines.append(f"projection onto interval: {pf.to_dsl(p_a)}")
    elif c.reason is sa.FactorReason.CLOSED_OR_OPEN_BOUNDED:
        ob = sa.interval_obstruction(cmd.I, cmd.grid)
        w = ob.first_witness()
        lines.append(f"probe point: {fr(ob.probe)}")
        lines.append(f"placements examined: {len(ob.branches)}, all obstructed: {'yes' if ob.closed else 'no'}")
        if w is not None:
            if w.kind == "double":
                (a1, e1), (a2, e2) = w.representations
                lines.append(f"witness: placement {fr(w.placement)}: {fr(w.point)} = {fr(a1)}+{fr(e1)} = "
                             f"{fr(a2)}+{fr(e2)}")
            else:
                lines.append(f"witness: placement {fr(w.placement)}: gap point {fr(w.point)} cannot be covered")
        doc["obstruction"] = {
            "probe": fr(ob.probe), "closed": ob.closed,
            "branches": [{"placement": fr(b.placement), "kind": b.kind,
                          "point": None if b.point is None else fr(b.point)} for b in ob.branches],
        }
    return "\n".join(lines), doc, EXIT_OK if c.is_factor else EXIT_REFUTED


def _run_bsem(cmd):
    ctx = bsem.BContext(cmd.b)
    b = fr(cmd.b)
    if isinstance(cmd, Gdiv):
        q, r = bsem.gdiv(cmd.a, ctx)
        text = f"{fr(cmd.a)} = {fr(q)} + {fr(r)}"
        doc = {"command": "gdiv", "a": fr(cmd.a), "b": b, "multiple": fr(q), "remainder": fr(r),
               "quotient": fr(q / cmd.b)}
    elif isinstance(cmd, BAdd):
        s = bsem.bsem_add(cmd.x, cmd.y, ctx)
        text = f"{fr(cmd.x)} +_{b} {fr(cmd.y)} = {fr(s)}"
        doc = {"command": "badd", "x": fr(cmd.x), "y": fr(cmd.y), "b": b, "sum": fr(s)}
    else:
        y = bsem.bsem_inverse(cmd.x, ctx)
        text = f"-_{b} {fr(cmd.x)} = {fr(y)}"
        doc = {"command": "binv", "x": fr(cmd.x), "b": b, "inverse": fr(y)}
    return text, doc, EXIT_OK


def execute(cmd: Command) -> tuple[str, dict[str, Any], int]:
    if isinstance(cmd, Eval):
        return _run_eval(cmd)
    if isinstance(cmd, Check):
        return _single("check", fe.check_equation(cmd.eq, cmd.f, cmd.grid))
    if isinstance(cmd, Scan):
        return _run_scan(cmd)
    if isinstance(cmd, Dsum):
        return _run_dsum(cmd)
    if isinstance(cmd, Classify):
        return _run_classify(cmd)
    if isinstance(cmd, (Gdiv, BAdd, BInv)):
        return _run_bsem(cmd)
    if isinstance(cmd, BAxioms):
        ctx = bsem.BContext(cmd.b)
        return _reports("baxioms", [bsem.axiom_check(a, ctx, cmd.grid) for a in cmd.axioms], {"b": fr(cmd.b)})
    if isinstance(cmd, Lemma34):
        return _single("lemma34", fe.projection_division_check(cmd.A, cmd.grid, cmd.ns, cmd.side))
    if isinstance(cmd, Eisenberg):
        return _single("eisenberg", fe.eisenberg_check(cmd.f, cmd.grid, cmd.ks, cmd.ns))
    raise TypeError(f"unknown command {cmd!r}")


_LIBRARY_ERRORS = (pf.MuUndefined, pf.ZeroScale, bsem.NotInBSegment, sa.NotATransversal,
                   sa.NoConstructiveProjection, sa.NotInSumSet, DivisionByZero, ValueError)


def run(cmd: Command) -> tuple[str, dict[str, Any], int]:
    """Execute ``cmd``; library errors become an exit-2 report instead of a traceback."""
    try:
        return execute(cmd)
    except _LIBRARY_ERRORS as e:
        msg = f"{type(e).__name__}: {e}"
        return f"error: {msg}", {"command": type(cmd).__name__.lower(), "error": msg}, EXIT_ERROR


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        inv = parse_args(argv)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError) as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    text, doc, code = run(inv.command)
    if inv.json_path == "-":
        sys.stdout.write(dumps(doc))
    else:
        print(text)
        if inv.json_path:
            with open(inv.json_path, "w") as fh:
                fh.write(dumps(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
