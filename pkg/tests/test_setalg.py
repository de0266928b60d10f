import itertools
from fractions import Fraction as F

import pytest

from floorparts import partfn as pf
from floorparts import setalg as sa
from floorparts.funeq import Equation, check_equation
from floorparts.grid import GridSpec
from floorparts.report import Verdict

GRID = GridSpec.exhaustive(3, 8)


def test_membership_examples():
    assert sa.membership(sa.Lattice(0, 1), F(-3))
    assert sa.membership(sa.BSegment(-2), F(-3, 2))
    assert not sa.membership(sa.RatInterval.closed_open(0, 1), F(1))
    assert F(1, 2) in sa.PeriodicSet(frozenset({F(1, 2)}))
    assert F(5, 2) in sa.PeriodicSet(frozenset({F(1, 2)}))
    assert F(7) in sa.REALS
    assert not sa.membership(sa.BSegment(-2), F(0, 1) - 2)


def test_lattice_canonical():
    assert sa.Lattice(F(7, 2), -1) == sa.Lattice(F(1, 2), 1)
    with pytest.raises(ValueError):
        sa.Lattice(0, 0)


def test_direct_sum_examples():
    v = sa.direct_sum_check(sa.FiniteSet.of(0, 2), sa.FiniteSet.of(0, 1))
    assert v.status is sa.DsumStatus.VERIFIED_EXHAUSTIVE
    v = sa.direct_sum_check(sa.FiniteSet.of(0, 1), sa.FiniteSet.of(0, 1))
    assert v.status is sa.DsumStatus.REFUTED and v.witness.describe() == "1 = 1+0 = 0+1"
    v = sa.direct_sum_check(sa.Lattice(F(1, 3), 1), sa.RatInterval.closed_open(0, 1))
    assert v.status is sa.DsumStatus.VERIFIED_ANALYTIC and v.covers_line
    v = sa.direct_sum_check(sa.Lattice(0, 1), sa.RatInterval.closed(0, 1))
    assert v.status is sa.DsumStatus.REFUTED
    assert v.witness.replays(sa.Lattice(0, 1), sa.RatInterval.closed(0, 1))


@pytest.mark.parametrize("A, B", [
    (sa.Lattice(0, 1), sa.RatInterval.open(0, 1)),
    (sa.Lattice(0, F(1, 2)), sa.RatInterval.closed_open(0, 1)),
    (sa.PeriodicSet(frozenset({F(0), F(1, 2)})), sa.RatInterval.closed_open(0, 1)),
    (sa.REALS, sa.FiniteSet.of(0, 3)),
])
def test_direct_sum_witnesses_replay(A, B):
    v = sa.direct_sum_check(A, B, GRID)
    if v.status is sa.DsumStatus.REFUTED:
        assert v.witness.replays(A, B)
    else:
        assert v.status is sa.DsumStatus.UNKNOWN


def test_direct_sum_unknown_without_witness():
    v = sa.direct_sum_check(sa.Lattice(0, 2), sa.Lattice(1, 4), GRID)
    assert v.direct in (False, None)
    if v.direct is False:
        assert v.witness.replays(sa.Lattice(0, 2), sa.Lattice(1, 4))


def test_brute_force_examples():
    reps = sa.brute_force_representations(sa.FiniteSet.of(0, 2), sa.FiniteSet.of(0, 1))
    assert dict(reps) == {0: [(0, 0)], 1: [(0, 1)], 2: [(2, 0)], 3: [(2, 1)]}
    reps = sa.brute_force_representations(sa.FiniteSet.of(0), sa.FiniteSet.of(3, F(1, 2), -1))
    assert all(len(v) == 1 for v in reps.values())
    reps = sa.brute_force_representations(sa.FiniteSet.of(0, 1), sa.FiniteSet.of(0, 1))
    assert len(reps[F(1)]) == 2


def test_projection_examples():
    assert sa.projection(sa.Lattice(0, 1), sa.RatInterval.closed_open(0, 1), F(7, 2)) == (3, F(1, 2))
    assert sa.projection(sa.Lattice(F(1, 3), 1), sa.RatInterval.closed_open(0, 1), F(1, 3)) == (F(1, 3), 0)
    assert sa.projection(sa.Lattice(0, F(3, 2)), sa.BSegment(F(3, 2)), F(7, 2)) == (3, F(1, 2))
    with pytest.raises(sa.NoConstructiveProjection):
        sa.projection(sa.FiniteSet.of(0, 1), sa.FiniteSet.of(0, 1), 1)
    with pytest.raises(sa.NotInSumSet):
        sa.projection(sa.FiniteSet.of(0, 1), sa.FiniteSet.of(0, 2), 7)


@pytest.mark.parametrize("A, B", [
    (sa.Lattice(0, 1), sa.RatInterval.closed_open(0, 1)),
    (sa.RatInterval.open_closed(-1, 0), sa.Lattice(F(1, 2), 1)),
    (sa.Lattice(F(1, 3), F(3, 2)), sa.BSegment(F(-3, 2))),
    (sa.FiniteSet.of(F(1, 2)), sa.REALS),
])
def test_projection_soundness(A, B):
    for x in GRID.points():
        a, b = sa.projection(A, B, x)
        assert a + b == x and sa.membership(A, a) and sa.membership(B, b)


def test_classify_unit():
    c = sa.classify_interval(sa.RatInterval.closed_open(0, 1))
    assert c.is_factor and c.reason is sa.FactorReason.HALF_OPEN_BOUNDED
    assert c.complement == sa.INTEGERS
    p_b, p_a = c.projection_pair
    assert pf.equal_on_grid(p_b, pf.Floor(), GRID).verdict is Verdict.VERIFIED
    assert pf.equal_on_grid(p_a, pf.Frac(), GRID).verdict is Verdict.VERIFIED


def test_classify_open_closed():
    I = sa.RatInterval.open_closed(F(1, 3), F(7, 2))
    c = sa.classify_interval(I)
    assert c.is_factor
    assert c.complement.b == F(19, 6)
    p_b, p_a = c.projection_pair
    for x in GRID.points():
        a, b = pf.evaluate(p_a, x), pf.evaluate(p_b, x)
        assert a + b == x and sa.membership(I, a) and sa.membership(c.complement, b)
    # the alternative complement also works
    assert sa.direct_sum_check(sa.Lattice(F(1, 3), F(19, 6)), I).direct


@pytest.mark.parametrize("I, reason", [
    (sa.RatInterval.closed(0, 1), sa.FactorReason.CLOSED_OR_OPEN_BOUNDED),
    (sa.RatInterval.open(0, 1), sa.FactorReason.CLOSED_OR_OPEN_BOUNDED),
    (sa.RatInterval(F(0), None, True, False), sa.FactorReason.UNBOUNDED_PROPER),
    (sa.RatInterval(None, F(0), False, True), sa.FactorReason.UNBOUNDED_PROPER),
    (sa.RatInterval.closed_open(2, 2), sa.FactorReason.DEGENERATE),
])
def test_classify_non_factors(I, reason):
    c = sa.classify_interval(I)
    assert not c.is_factor and c.reason is reason


def test_classify_line_and_point():
    c = sa.classify_interval(sa.REALS)
    assert c.is_factor and c.reason is sa.FactorReason.FULL_LINE and c.complement == sa.FiniteSet.of(0)
    c = sa.classify_interval(sa.RatInterval.closed(F(1, 2), F(1, 2)))
    assert c.is_factor and c.reason is sa.FactorReason.DEGENERATE
    assert check_equation(Equation.DECOMPOSER, c.projection_pair[1], GRID).verdict is Verdict.UNKNOWN


@pytest.mark.parametrize("I", [sa.RatInterval.closed(0, 1), sa.RatInterval.open(0, 1),
                               sa.RatInterval.closed(F(-1, 3), F(5, 2))], ids=str)
def test_obstruction_closes(I):
    ob = sa.interval_obstruction(I)
    assert ob.closed
    for br in ob.branches:
        if br.kind == "double":
            (a1, e1), (a2, e2) = br.representations
            assert a1 + e1 == a2 + e2 == br.point and sa.membership(I, e1) and sa.membership(I, e2)
        assert br.kind in ("double", "gap")


def test_obstruction_half_open_stays_open():
    assert not sa.interval_obstruction(sa.RatInterval.closed_open(0, 1)).closed


def test_condition_equivalence_small():
    universe = range(4)
    subsets = [sa.FiniteSet(frozenset(c)) for r in range(5) for c in itertools.combinations(universe, r)]
    for A in subsets:
        for B in subsets:
            d = sa.direct_sum_check(A, B).direct
            assert d == sa.is_direct_by_representations(A, B) == sa.disjoint_translates(A, B)


def test_difference_pair():
    d = F(3, 4)
    for S in (sa.RatInterval.closed_open(0, 1), sa.Lattice(F(1, 4), F(3, 4)), sa.FiniteSet.of(0, F(3, 4))):
        s1, s2 = sa.difference_pair(S, d)
        assert s1 - s2 == d and s1 in S and s2 in S
    assert sa.difference_pair(sa.RatInterval.closed_open(0, 1), F(1)) is None


def test_periodic_sets():
    assert sa.coperiodic_closure_check(sa.PeriodicSet(frozenset({F(0)}))).verdict is Verdict.UNKNOWN
    assert sa.coperiodic_closure_check(sa.PeriodicSet(frozenset({F(0), F(1, 2)}))).verdict is Verdict.UNKNOWN
    rep = sa.coperiodic_closure_check(sa.RatInterval.closed_open(0, 1))
    assert rep.refuted


def test_periodic_offsets_validated():
    with pytest.raises(ValueError):
        sa.PeriodicSet(frozenset({F(1)}))


def test_unit_projections():
    p = sa.unit_integer_projection(sa.RatInterval.closed_open(0, 1))
    assert pf.equal_on_grid(p, pf.Floor(), GRID).verdict is Verdict.VERIFIED
    p = sa.unit_integer_projection(sa.RatInterval.open_closed(-1, 0))
    assert pf.equal_on_grid(p, pf.Ceil(), GRID).verdict is Verdict.VERIFIED
    with pytest.raises(sa.NotATransversal):
        sa.unit_integer_projection(sa.RatInterval.closed_open(0, 2))
