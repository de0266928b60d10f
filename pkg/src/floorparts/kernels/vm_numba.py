"""Per-point interpreter compiled with numba; same instruction set as vm_numpy."""
from __future__ import annotations

import numpy as np
from numba import njit

from .program import Program


@njit(cache=True)
def _run(code, args, tab_off, tab_keys, tab_vals, tab_has_def, tab_def, depth, xs, out):
    stack = np.empty(depth + 1, dtype=np.int64)
    ok = True
    for i in range(xs.shape[0]):
        stack[0] = xs[i]
        sp = 1
        for pc in range(code.shape[0]):
            op = code[pc]
            arg = args[pc]
            if op == 0:  # dup
                stack[sp] = stack[sp - 1]
                sp += 1
            elif op == 1:  # neg
                stack[sp - 1] = -stack[sp - 1]
            elif op == 2:  # addc
                stack[sp - 1] += arg
            elif op == 3:  # mulc
                stack[sp - 1] *= arg
            elif op == 4:  # sub
                sp -= 1
                stack[sp - 1] = stack[sp - 1] - stack[sp]
            elif op == 5:  # add
                sp -= 1
                stack[sp - 1] = stack[sp - 1] + stack[sp]
            elif op == 6:  # bfloor
                stack[sp - 1] = (stack[sp - 1] // arg) * arg
            elif op == 7:  # bceil
                stack[sp - 1] = -((-stack[sp - 1]) // arg) * arg
            elif op == 8:  # mods
                stack[sp - 1] = stack[sp - 1] % arg
            elif op == 9:  # mu
                lo = tab_off[arg]
                hi = tab_off[arg + 1]
                v = stack[sp - 1]
                j = lo + np.searchsorted(tab_keys[lo:hi], v)
                if j < hi and tab_keys[j] == v:
                    stack[sp - 1] = tab_vals[j]
                elif tab_has_def[arg]:
                    stack[sp - 1] = tab_def[arg]
                else:
                    ok = False
                    stack[sp - 1] = 0
            elif op == 10:  # swap
                t = stack[sp - 1]
                stack[sp - 1] = stack[sp - 2]
                stack[sp - 2] = t
        out[i] = stack[0]
    return ok


def run(prog: Program, xs: np.ndarray) -> tuple[np.ndarray, bool]:
    xs = np.ascontiguousarray(xs, dtype=np.int64)
    out = np.empty_like(xs)
    ok = _run(prog.code, prog.args, prog.tab_off, prog.tab_keys, prog.tab_vals,
              prog.tab_has_def, prog.tab_def, prog.depth, xs, out)
    return out, bool(ok)
