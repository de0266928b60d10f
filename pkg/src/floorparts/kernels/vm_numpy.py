"""Vectorised interpreter: each instruction acts on a whole column of points."""
from __future__ import annotations

import numpy as np

from .program import ADD, ADDC, BCEIL, BFLOOR, DUP, MODS, MU, MULC, NEG, SUB, SWAP, Program


def run(prog: Program, xs: np.ndarray) -> tuple[np.ndarray, bool]:
    stack = [np.asarray(xs, dtype=np.int64)]
    ok = True
    for op, arg in zip(prog.code.tolist(), prog.args.tolist()):
        top = stack[-1]
        if op == DUP:
            stack.append(top)
        elif op == NEG:
            stack[-1] = -top
        elif op == ADDC:
            stack[-1] = top + arg
        elif op == MULC:
            stack[-1] = top * arg
        elif op == SUB:
            stack.pop()
            stack[-1] = stack[-1] - top
        elif op == ADD:
            stack.pop()
            stack[-1] = stack[-1] + top
        elif op == BFLOOR:
            stack[-1] = np.floor_divide(top, arg) * arg
        elif op == BCEIL:
            stack[-1] = -np.floor_divide(-top, arg) * arg
        elif op == MODS:
            stack[-1] = np.mod(top, arg)
        elif op == MU:
            lo, hi = prog.tab_off[arg], prog.tab_off[arg + 1]
            keys, vals = prog.tab_keys[lo:hi], prog.tab_vals[lo:hi]
            if len(keys):
                idx = np.minimum(np.searchsorted(keys, top), len(keys) - 1)
                hit = keys[idx] == top
                found = vals[idx]
            else:
                hit = np.zeros(top.shape, dtype=bool)
                found = np.zeros(top.shape, dtype=np.int64)
            if prog.tab_has_def[arg]:
                stack[-1] = np.where(hit, found, prog.tab_def[arg])
            else:
                if not hit.all():
                    ok = False
                stack[-1] = np.where(hit, found, 0)
        elif op == SWAP:
            stack[-1], stack[-2] = stack[-2], stack[-1]
        else:
            raise ValueError(f"bad opcode {op}")
    return stack[-1], ok
