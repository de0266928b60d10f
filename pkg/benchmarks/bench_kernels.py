"""Time grid checks on the numba, numpy and exact backends.

    python3 benchmarks/bench_kernels.py [--repeat N] [--skip-exact]

Each case is run once to warm up (numba compiles on first call), then timed
``--repeat`` times; the best time is reported.  Verdicts must agree across
backends, otherwise the script exits non-zero.
"""
import argparse
import sys
import time
from fractions import Fraction

from floorparts import kernels
from floorparts import partfn as pf
from floorparts.funeq import Equation, check_equation, eisenberg_check
from floorparts.grid import GridSpec

CASES = [
    ("decomposer floor, default grid", lambda: check_equation(Equation.DECOMPOSER, pf.Floor())),
    ("canceler frac, default grid", lambda: check_equation(Equation.CANCELER, pf.Frac())),
    ("mult-symmetric frac, default grid", lambda: check_equation(Equation.MULTIPLICATIVE_SYMMETRIC, pf.Frac())),
    ("strong decomposer bfrac(3/2)", lambda: check_equation(Equation.STRONG_DECOMPOSER, pf.BFrac(Fraction(3, 2)))),
    ("associative bfrac(-2), R=2 D=8", lambda: check_equation(Equation.ASSOCIATIVE, pf.BFrac(-2),
                                                               GridSpec.exhaustive(2, 8))),
    ("eisenberg ceil, default grid", lambda: eisenberg_check(pf.Ceil())),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        rep = fn()
        times.append(time.perf_counter() - t)
    return min(times), rep


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-exact", action="store_true")
    args = ap.parse_args(argv)
    backends = ["numba", "numpy"] + ([] if args.skip_exact else ["exact"])
    print(f"{'case':38s}" + "".join(f"{b:>12s}" for b in backends))
    mismatch = False
    prev = kernels.backend()
    try:
        for name, fn in CASES:
            row, verdicts = [], set()
            for b in backends:
                kernels.set_backend(b)
                fn()  # warm-up
                t, rep = best_of(fn, 1 if b == "exact" else args.repeat)
                row.append(t)
                verdicts.add((rep.verdict, rep.points_checked, rep.witness))
            mismatch |= len(verdicts) != 1
            print(f"{name:38s}" + "".join(f"{t:11.3f}s" for t in row) + ("  MISMATCH" if len(verdicts) != 1 else ""))
    finally:
        kernels.set_backend(prev)
    return 1 if mismatch else 0


if __name__ == "__main__":
    sys.exit(main())
