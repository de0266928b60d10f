from fractions import Fraction as F

import pytest

from floorparts import partfn as pf
from floorparts.exactnum import ceil_q, floor_q
from floorparts.grid import GridSpec
from floorparts.report import Verdict

from .conftest import B_SET
from .specs import CEIL_MU, family_members

GRID = GridSpec.exhaustive(3, 8)


def test_examples():
    assert pf.evaluate(pf.ShiftedFloor(F(1, 2)), F(7, 10)) == F(1, 2)
    assert pf.evaluate(pf.BFloor(F(3, 2)), F(7, 2)) == 3
    assert pf.evaluate(pf.star(pf.Floor()), F(7, 2)) == F(1, 2)
    for x in GRID.points():
        assert pf.evaluate(pf.ShiftedFloor(0), x) == floor_q(x)
        assert pf.evaluate(pf.MuCoperiodic(CEIL_MU), x) == ceil_q(x)
        assert pf.evaluate(pf.star(pf.Identity()), x) == 0


def test_star_involution():
    f = pf.BFrac(F(-3, 2))
    assert pf.star(pf.star(f)) == f
    assert pf.star(f) == pf.Star(f)


@pytest.mark.parametrize("f", family_members(B_SET), ids=str)
def test_star_sums_to_identity(f):
    for x in GRID.points():
        assert pf.evaluate(f, x) + pf.evaluate(pf.star(f), x) == x


def test_transform_examples():
    first, second = pf.transform(pf.Floor(), 0, 1, F(1, 2))
    assert pf.equal_on_grid(first, pf.FloorPlus(F(1, 2)), GRID).verdict is Verdict.VERIFIED
    f = pf.ShiftedCeil(F(1, 3))
    first, second = pf.transform(f, 0, 1, 0)
    assert pf.equal_on_grid(first, f, GRID).verdict is Verdict.VERIFIED
    assert pf.equal_on_grid(second, pf.star(f), GRID).verdict is Verdict.VERIFIED
    first, _ = pf.transform(pf.Floor(), 0, F(3, 2), 0)
    assert pf.equal_on_grid(first, pf.BFloor(F(3, 2)), GRID).verdict is Verdict.VERIFIED


def test_equal_on_grid_examples():
    assert pf.equal_on_grid(pf.ShiftedFloor(0), pf.Floor(), GRID).verdict is Verdict.VERIFIED
    rep = pf.equal_on_grid(pf.ShiftedFloor(F(1, 2)), pf.Floor(), GRID)
    assert rep.verdict is Verdict.REFUTED
    (name, x), = rep.witness.vars
    assert pf.evaluate(pf.ShiftedFloor(F(1, 2)), x) == rep.witness.lhs != rep.witness.rhs
    assert pf.evaluate(pf.ShiftedFloor(F(1, 2)), F(0)) == F(-1, 2)
    assert pf.equal_on_grid(pf.Negated(pf.Ceil()), pf.Floor(), GRID).verdict is Verdict.VERIFIED
    sampled = GridSpec.sampled(50, seed=1)
    assert pf.equal_on_grid(pf.Floor(), pf.Floor(), sampled).verdict is Verdict.UNKNOWN


@pytest.mark.parametrize("c", [-2, 0, 3])
def test_integer_shift_is_floor(c):
    assert pf.equal_on_grid(pf.ShiftedFloor(c), pf.Floor(), GRID).verdict is Verdict.VERIFIED


@pytest.mark.parametrize("f", family_members([F(3, 2)]), ids=str)
def test_double_negation(f):
    assert pf.equal_on_grid(pf.Negated(pf.Negated(f)), f, GRID).verdict is Verdict.VERIFIED


def test_zero_scale_rejected():
    for cls in (pf.BFloor, pf.BCeil, pf.BFrac):
        with pytest.raises(pf.ZeroScale):
            cls(0)
    with pytest.raises(pf.ZeroScale):
        pf.AffineConjugate(pf.Floor(), 0, 0, 0)


def test_mu_table():
    t = pf.MuTable(((F(1, 2), F(3)),))
    assert pf.evaluate(pf.MuPeriodic(t), F(5, 2)) == 3
    assert pf.evaluate(pf.MuCoperiodic(t), F(-3, 2)) == -2 + 3
    with pytest.raises(pf.MuUndefined) as e:
        pf.evaluate(pf.MuPeriodic(t), F(1, 3))
    assert e.value.point == F(1, 3)
    with pytest.raises(ValueError):
        pf.MuTable(((F(1), F(0)),))
    with pytest.raises(ValueError):
        pf.MuTable(((F(0), F(0)), (F(0), F(1))))


def test_load_mu_table(tmp_path):
    p = tmp_path / "mu.txt"
    p.write_text("# ceiling table\n0 0\n1/2 1\ndefault 1\n")
    t = pf.load_mu_table(p)
    assert t.entries == ((F(0), F(0)), (F(1, 2), F(1))) and t.default == 1
    p.write_text("0 0 0\n")
    with pytest.raises(ValueError):
        pf.load_mu_table(p)


def test_parameter_coercion():
    assert pf.ShiftedFloor(1) == pf.ShiftedFloor(F(1))
    assert pf.to_dsl(pf.AffineConjugate(pf.Floor(), 1, F(-3, 2), 0)) == "conj(floor,1,-3/2,0)"
