import random
from fractions import Fraction as F

import numpy as np
import pytest

from floorparts import kernels
from floorparts import partfn as pf
from floorparts.funeq import Equation, check_equation, eisenberg_check
from floorparts.grid import GridSpec
from floorparts.kernels import compile_spec, required_scale

from .conftest import B_SET
from .specs import family_members, random_spec

GRID = GridSpec.exhaustive(4, 16)


def _compare(f, backend):
    scale = int(np.lcm(GRID.denominator_lcm(), required_scale(f)))
    prog = compile_spec(f, scale)
    if prog is None:
        return False
    xs = np.array([int(x * scale) for x in GRID.points()], dtype=np.int64)
    prev = kernels.set_backend(backend)
    try:
        out, ok = kernels.run(prog, xs)
    finally:
        kernels.set_backend(prev)
    assert ok
    expect = [pf.evaluate(f, x) for x in GRID.points()]
    assert [F(int(v), scale) for v in out] == expect
    return True


@pytest.mark.parametrize("backend", ["numba", "numpy"])
@pytest.mark.parametrize("f", [g for g in family_members(B_SET) if not isinstance(g, pf.Linear)
                               or g.k.denominator == 1], ids=str)
def test_vm_matches_exact(f, backend):
    if not _compare(f, backend):
        assert isinstance(f, pf.AffineConjugate) and abs(f.b) != 1


@pytest.mark.parametrize("backend", ["numba", "numpy"])
def test_vm_random_specs(backend):
    rng = random.Random(7)
    compiled = 0
    for _ in range(60):
        f = random_spec(rng, depth=2)
        try:
            [pf.evaluate(f, x) for x in GRID.points()]
        except pf.MuUndefined:
            continue
        if required_scale(f) > 10**6:
            continue
        compiled += _compare(f, backend)
    assert compiled > 10


def test_uncompilable_specs():
    assert compile_spec(pf.Linear(F(1, 2)), 720720) is None
    assert compile_spec(pf.AffineConjugate(pf.Floor(), 0, F(3, 2), 0), 720720) is None


CASES = [
    (Equation.DECOMPOSER, pf.Floor()),
    (Equation.DECOMPOSER, pf.Linear(F(1, 2))),
    (Equation.STRONG_DECOMPOSER, pf.BFrac(F(-3, 2))),
    (Equation.CANCELER, pf.Floor()),
    (Equation.CANCELER, pf.Frac()),
    (Equation.MULTIPLICATIVE_SYMMETRIC, pf.Floor()),
    (Equation.PERIODIC1, pf.Frac()),
    (Equation.COPERIODIC1, pf.Ceil()),
    (Equation.DECOMPOSER, pf.AffineConjugate(pf.Floor(), F(1, 3), F(3, 2), 0)),
]


@pytest.mark.parametrize("eq, f", CASES, ids=lambda v: str(getattr(v, "value", v)))
def test_checks_agree_across_backends(eq, f):
    grid = GridSpec.exhaustive(2, 8)
    reports = []
    for b in ("numba", "numpy", "exact"):
        prev = kernels.set_backend(b)
        try:
            reports.append(check_equation(eq, f, grid))
        finally:
            kernels.set_backend(prev)
    assert reports[0] == reports[1] == reports[2]


def test_eisenberg_agrees_across_backends():
    reports = []
    for b in ("numba", "numpy", "exact"):
        prev = kernels.set_backend(b)
        try:
            reports.append(eisenberg_check(pf.FloorPlus(1), GridSpec.exhaustive(2, 8)))
        finally:
            kernels.set_backend(prev)
    assert reports[0] == reports[1] == reports[2]


def test_set_backend_rejects_unknown():
    with pytest.raises(ValueError):
        kernels.set_backend("cuda")


@pytest.mark.parametrize("name", ["numpy", "exact"])
def test_env_flag_selects_backend(name):
    import os
    import subprocess
    import sys
    env = dict(os.environ, FLOORPARTS_BACKEND=name)
    out = subprocess.run([sys.executable, "-c", "from floorparts import kernels; print(kernels.backend())"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == name


def test_env_flag_rejects_unknown():
    import os
    import subprocess
    import sys
    env = dict(os.environ, FLOORPARTS_BACKEND="gpu")
    out = subprocess.run([sys.executable, "-c", "import floorparts.kernels"], env=env, capture_output=True, text=True)
    assert out.returncode != 0 and "FLOORPARTS_BACKEND" in out.stderr
