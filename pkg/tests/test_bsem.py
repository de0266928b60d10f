from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from floorparts import bsem
from floorparts import partfn as pf
from floorparts.grid import GridSpec
from floorparts.report import Verdict
from floorparts.setalg import membership

from .conftest import B_SET

GRID = GridSpec.exhaustive(3, 8)


@pytest.mark.parametrize("a, b, q, r", [(7, 2, 6, 1), (-7, 2, -8, 1), (6, 2, 6, 0), (F(5, 2), -2, 4, F(-3, 2))])
def test_gdiv_examples(a, b, q, r):
    assert bsem.gdiv(a, bsem.BContext(b)) == (q, r)


def test_add_and_inverse_examples():
    assert bsem.bsem_add(F(1, 2), F(3, 4), bsem.BContext(1)) == F(1, 4)
    assert bsem.bsem_add(1, 1, bsem.BContext(F(3, 2))) == F(1, 2)
    assert bsem.bsem_inverse(F(1, 4), bsem.BContext(1)) == F(3, 4)
    assert bsem.bsem_inverse(F(1, 2), bsem.BContext(F(3, 2))) == 1
    for b in B_SET:
        assert bsem.bsem_inverse(0, bsem.BContext(b)) == 0
    with pytest.raises(bsem.NotInBSegment):
        bsem.bsem_inverse(1, bsem.BContext(1))
    with pytest.raises(bsem.NotInBSegment):
        bsem.bsem_inverse(F(1, 2), bsem.BContext(-2))


def test_zero_modulus():
    with pytest.raises(pf.ZeroScale):
        bsem.BContext(0)


@pytest.mark.parametrize("b", B_SET, ids=str)
def test_gdiv_reconstruction(b):
    ctx = bsem.BContext(b)
    for a in GRID.points():
        q, r = bsem.gdiv(a, ctx)
        assert q + r == a and (q / b).denominator == 1 and 0 <= r / b < 1
        assert q == pf.evaluate(pf.BFloor(b), a) and r == pf.evaluate(pf.BFrac(b), a)


@given(st.integers(-10**6, 10**6), st.integers(1, 1000))
def test_gdiv_euclid(a, b):
    q, r = bsem.gdiv(a, bsem.BContext(b))
    assert r == a % b and q == b * (a // b)


@given(st.fractions(max_denominator=50), st.fractions(max_denominator=50), st.fractions(max_denominator=50),
       st.sampled_from(B_SET))
def test_associativity_property(x, y, z, b):
    ctx = bsem.BContext(b)
    add = lambda u, v: bsem.bsem_add(u, v, ctx)  # noqa: E731
    assert add(add(x, y), z) == add(x, add(y, z))


@pytest.mark.parametrize("b", B_SET, ids=str)
def test_axioms_hold(b):
    ctx = bsem.BContext(b)
    for ax in bsem.Axiom:
        g = GridSpec.exhaustive(2, 6) if ax is bsem.Axiom.ASSOCIATIVITY else GRID
        rep = bsem.axiom_check(ax, ctx, g)
        assert rep.verdict is Verdict.UNKNOWN and rep.points_checked > 0


def test_axiom_examples():
    rep = bsem.axiom_check(bsem.Axiom.IDENTITY, bsem.BContext(F(3, 2)))
    assert rep.verdict is Verdict.UNKNOWN
    rep = bsem.axiom_check(bsem.Axiom.CLOSURE, bsem.BContext(-2))
    assert rep.verdict is Verdict.UNKNOWN
    rep = bsem.axiom_check(bsem.Axiom.ASSOCIATIVITY, bsem.BContext(1), GridSpec.sampled(2000, seed=5))
    assert rep.verdict is Verdict.UNKNOWN and rep.points_checked == 2000


@pytest.mark.parametrize("b", B_SET, ids=str)
def test_maximality(b):
    ctx = bsem.BContext(b)
    assert bsem.maximality_probe(ctx, GRID).verdict is Verdict.VERIFIED
    for x in GRID.points():
        if not membership(ctx.segment, x):
            assert bsem.bsem_add(x, 0, ctx) != x


def test_negative_b_segment_orientation():
    ctx = bsem.BContext(-2)
    assert membership(ctx.segment, F(-1)) and membership(ctx.segment, F(0))
    assert not membership(ctx.segment, F(-2)) and not membership(ctx.segment, F(1))
    assert bsem.bsem_add(F(-3, 2), F(-3, 2), ctx) == -1
