"""Compile function specs to stack programs over scaled integers.

A rational ``x`` is carried as the int64 ``X = x * scale``.  Every family
built from floors, shifts, b-parts, integer multiples and mu-tables maps
``(1/scale)Z`` into itself once ``scale`` absorbs each parameter's
denominator, so the whole evaluation stays in integers.  Specs that leave
that lattice (``linear(1/2)``, conjugation by ``b != +-1``) do not compile
and callers use the exact evaluator instead.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional

import numpy as np

from .. import partfn as pf

DUP, NEG, ADDC, MULC, SUB, ADD, BFLOOR, BCEIL, MODS, MU, SWAP = range(11)
OPNAMES = ("dup", "neg", "addc", "mulc", "sub", "add", "bfloor", "bceil", "mods", "mu", "swap")

# Stay well inside int64 so sums of a few bounded values cannot wrap.
INT_LIMIT = 2**60


class NotCompilable(Exception):
    pass


@dataclass(frozen=True, eq=False)
class Program:
    code: np.ndarray
    args: np.ndarray
    tab_off: np.ndarray
    tab_keys: np.ndarray
    tab_vals: np.ndarray
    tab_has_def: np.ndarray
    tab_def: np.ndarray
    depth: int
    scale: int

    def bound(self, in_bound: int) -> int:
        """Upper bound on ``|output|`` given ``|input| <= in_bound`` (all scaled)."""
        stack = [in_bound]
        for op, arg in zip(self.code.tolist(), self.args.tolist()):
            if op == DUP:
                stack.append(stack[-1])
            elif op == ADDC:
                stack[-1] += abs(arg)
            elif op == MULC:
                stack[-1] *= abs(arg)
            elif op in (SUB, ADD):
                t = stack.pop()
                stack[-1] += t
            elif op in (BFLOOR, BCEIL):
                stack[-1] += abs(arg)
            elif op == MODS:
                stack[-1] = arg
            elif op == MU:
                lo, hi = self.tab_off[arg], self.tab_off[arg + 1]
                vals = [abs(int(v)) for v in self.tab_vals[lo:hi]]
                if self.tab_has_def[arg]:
                    vals.append(abs(int(self.tab_def[arg])))
                stack[-1] = max(vals, default=0)
            elif op == SWAP:
                stack[-1], stack[-2] = stack[-2], stack[-1]
        return stack[-1]

    def listing(self) -> list[tuple[str, int]]:
        return [(OPNAMES[o], a) for o, a in zip(self.code.tolist(), self.args.tolist())]


def required_scale(f: pf.FunctionSpec) -> int:
    return lcm(1, *(c.denominator for c in pf.constants(f)))


class _Emitter:
    def __init__(self, scale: int):
        self.scale = scale
        self.ops: list[tuple[int, int]] = []
        self.tables: list[pf.MuTable] = []

    def k(self, q: Fraction) -> int:
        v = q * self.scale
        if v.denominator != 1:
            raise NotCompilable(f"constant {q} is not a multiple of 1/{self.scale}")
        return v.numerator

    def emit(self, op: int, arg: int = 0) -> None:
        self.ops.append((op, arg))

    def spec(self, f: pf.FunctionSpec) -> None:
        S = self.scale
        e = self.emit
        match f:
            case pf.Identity():
                pass
            case pf.Floor():
                e(BFLOOR, S)
            case pf.Ceil():
                e(BCEIL, S)
            case pf.Frac():
                e(DUP); e(BFLOOR, S); e(SUB)
            case pf.ShiftedFloor(c):
                e(ADDC, -self.k(c)); e(BFLOOR, S); e(ADDC, self.k(c))
            case pf.ShiftedCeil(c):
                e(ADDC, -self.k(c)); e(BCEIL, S); e(ADDC, self.k(c))
            case pf.ShiftedFrac(c):
                e(ADDC, -self.k(c)); e(DUP); e(BFLOOR, S); e(SUB)
            case pf.BFloor(b):
                e(BFLOOR, self.k(b))
            case pf.BCeil(b):
                e(BCEIL, self.k(b))
            case pf.BFrac(b):
                e(DUP); e(BFLOOR, self.k(b)); e(SUB)
            case pf.ShiftedBFloor(b, c):
                e(ADDC, -self.k(c)); e(BFLOOR, self.k(b)); e(ADDC, self.k(c))
            case pf.FloorPlus(c):
                e(BFLOOR, S); e(ADDC, self.k(c))
            case pf.MuPeriodic(table):
                e(MODS, S); e(MU, self.table(table))
            case pf.MuCoperiodic(table):
                e(DUP); e(BFLOOR, S); e(SWAP); e(MODS, S); e(MU, self.table(table)); e(ADD)
            case pf.Star(inner):
                e(DUP); self.spec(inner); e(SUB)
            case pf.Negated(inner):
                e(NEG); self.spec(inner); e(NEG)
            case pf.AffineConjugate(inner, a, b, c):
                if b not in (1, -1):
                    raise NotCompilable("conjugation by a scale other than +-1 leaves the lattice")
                if b == -1:
                    e(NEG)
                e(ADDC, self.k(a))
                self.spec(inner)
                if b == -1:
                    e(NEG)
                e(ADDC, self.k(c))
            case pf.Linear(k):
                if k.denominator != 1:
                    raise NotCompilable("non-integer linear factor leaves the lattice")
                e(MULC, k.numerator)
            case _:
                raise NotCompilable(f"unsupported spec {f!r}")

    def table(self, table: pf.MuTable) -> int:
        self.tables.append(table)
        return len(self.tables) - 1

    def finish(self) -> Program:
        depth = cur = 1
        for op, _ in self.ops:
            if op == DUP:
                cur += 1
            elif op in (SUB, ADD):
                cur -= 1
            depth = max(depth, cur)
        offs, keys, vals, has_def, defs = [0], [], [], [], []
        for t in self.tables:
            for key, val in t.entries:
                keys.append(self.k(key))
                vals.append(self.k(val))
            offs.append(len(keys))
            has_def.append(t.default is not None)
            defs.append(self.k(t.default) if t.default is not None else 0)
        i64 = np.int64
        return Program(
            code=np.array([o for o, _ in self.ops], dtype=i64),
            args=np.array([a for _, a in self.ops], dtype=i64),
            tab_off=np.array(offs, dtype=i64),
            tab_keys=np.array(keys, dtype=i64),
            tab_vals=np.array(vals, dtype=i64),
            tab_has_def=np.array(has_def, dtype=np.bool_),
            tab_def=np.array(defs, dtype=i64),
            depth=depth,
            scale=self.scale,
        )


def compile_spec(f: pf.FunctionSpec, scale: int) -> Optional[Program]:
    """Program for ``f`` at ``scale``, or None when ``f`` cannot stay in integers."""
    em = _Emitter(scale)
    try:
        em.spec(f)
        prog = em.finish()
    except NotCompilable:
        return None
    if max((abs(int(a)) for a in prog.args), default=0) >= INT_LIMIT:
        return None
    return prog
