"""Symbolic subsets of the line, direct sums and interval factors.

Membership is exact for every set family.  Direct-sum questions are
answered in tiers: an analytic rule table for the factorizations known
in closed form, exhaustive enumeration when both summands are finite, and
otherwise a bounded search for a nonzero common difference.
"""
from __future__ import annotations

import enum
import itertools
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from . import partfn as pf
from .exactnum import as_rational, floor_q, format_rational, frac_q, is_integer
from .grid import GridSpec
from .report import CheckReport, Verdict, Witness


class NoConstructiveProjection(ValueError):
    pass


class NotInSumSet(ValueError):
    pass


class NotATransversal(ValueError):
    pass


class SymbolicSet:
    __slots__ = ()

    def __contains__(self, x) -> bool:
        return membership(self, as_rational(x))

    def __str__(self) -> str:
        return to_dsl(self)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {to_dsl(self)}>"


@dataclass(frozen=True, repr=False)
class FiniteSet(SymbolicSet):
    elements: frozenset

    def __post_init__(self):
        object.__setattr__(self, "elements", frozenset(as_rational(e) for e in self.elements))

    @classmethod
    def of(cls, *xs) -> "FiniteSet":
        return cls(frozenset(xs))

    def sorted(self) -> list[Fraction]:
        return sorted(self.elements)


@dataclass(frozen=True, repr=False)
class Lattice(SymbolicSet):
    """``c + bZ``, stored with ``b > 0`` and ``0 <= c < b``."""

    c: Fraction
    b: Fraction

    def __post_init__(self):
        c, b = as_rational(self.c), as_rational(self.b)
        if b == 0:
            raise ValueError("lattice step must be nonzero")
        b = abs(b)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c - b * floor_q(c / b))


@dataclass(frozen=True, repr=False)
class RatInterval(SymbolicSet):
    """Interval intersected with Q; ``None`` endpoints are infinite (and open)."""

    lo: Optional[Fraction]
    hi: Optional[Fraction]
    lo_closed: bool = True
    hi_closed: bool = False

    def __post_init__(self):
        if self.lo is not None:
            object.__setattr__(self, "lo", as_rational(self.lo))
        else:
            object.__setattr__(self, "lo_closed", False)
        if self.hi is not None:
            object.__setattr__(self, "hi", as_rational(self.hi))
        else:
            object.__setattr__(self, "hi_closed", False)
        if self.lo is not None and self.hi is not None and self.lo > self.hi:
            raise ValueError("interval lower endpoint exceeds upper endpoint")

    @classmethod
    def closed_open(cls, lo, hi) -> "RatInterval":
        return cls(as_rational(lo), as_rational(hi), True, False)

    @classmethod
    def open_closed(cls, lo, hi) -> "RatInterval":
        return cls(as_rational(lo), as_rational(hi), False, True)

    @classmethod
    def closed(cls, lo, hi) -> "RatInterval":
        return cls(as_rational(lo), as_rational(hi), True, True)

    @classmethod
    def open(cls, lo, hi) -> "RatInterval":
        return cls(None if lo is None else as_rational(lo), None if hi is None else as_rational(hi),
                   False, False)

    @property
    def bounded(self) -> bool:
        return self.lo is not None and self.hi is not None

    @property
    def length(self) -> Optional[Fraction]:
        return self.hi - self.lo if self.bounded else None

    @property
    def is_empty(self) -> bool:
        return self.bounded and self.lo == self.hi and not (self.lo_closed and self.hi_closed)

    def shift(self, d: Fraction) -> "RatInterval":
        return RatInterval(None if self.lo is None else self.lo + d,
                           None if self.hi is None else self.hi + d, self.lo_closed, self.hi_closed)


@dataclass(frozen=True, repr=False)
class BSegment(SymbolicSet):
    """``b[0,1)``: ``[0,b)`` for ``b > 0`` and ``(b,0]`` for ``b < 0``."""

    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "b", as_rational(self.b))
        if self.b == 0:
            raise ValueError("segment scale must be nonzero")

    def as_interval(self) -> RatInterval:
        if self.b > 0:
            return RatInterval(Fraction(0), self.b, True, False)
        return RatInterval(self.b, Fraction(0), False, True)


@dataclass(frozen=True, repr=False)
class PeriodicSet(SymbolicSet):
    """``D + Z`` for a finite offset set ``D`` inside ``[0,1)``."""

    offsets: frozenset

    def __post_init__(self):
        offs = frozenset(as_rational(d) for d in self.offsets)
        for d in offs:
            if not 0 <= d < 1:
                raise ValueError(f"periodic offset {format_rational(d)} is outside [0,1)")
        object.__setattr__(self, "offsets", offs)


REALS = RatInterval(None, None, False, False)
INTEGERS = Lattice(Fraction(0), Fraction(1))
UNIT = RatInterval(Fraction(0), Fraction(1), True, False)


def membership(S: SymbolicSet, x: Fraction) -> bool:
    match S:
        case FiniteSet(elements):
            return x in elements
        case Lattice(c, b):
            return is_integer((x - c) / b)
        case RatInterval():
            return _in_interval(S, x)
        case BSegment(b):
            return 0 <= x / b < 1
        case PeriodicSet(offsets):
            return frac_q(x) in offsets
    raise TypeError(f"not a symbolic set: {S!r}")


def _in_interval(I: RatInterval, x: Fraction) -> bool:
    if I.lo is not None and (x < I.lo or (x == I.lo and not I.lo_closed)):
        return False
    if I.hi is not None and (x > I.hi or (x == I.hi and not I.hi_closed)):
        return False
    return True


def _fmt_end(v: Optional[Fraction], neg: bool) -> str:
    if v is None:
        return "-inf" if neg else "inf"
    return format_rational(v)


def to_dsl(S: SymbolicSet) -> str:
    fr = format_rational
    match S:
        case FiniteSet(elements):
            return "finite{" + ",".join(fr(e) for e in sorted(elements)) + "}"
        case Lattice(c, b):
            return f"lattice({fr(c)},{fr(b)})"
        case RatInterval(lo, hi, lc, hc):
            return ("interval" + ("[" if lc else "(") + _fmt_end(lo, True) + ","
                    + _fmt_end(hi, False) + ("]" if hc else ")"))
        case BSegment(b):
            return f"bsegment({fr(b)})"
        case PeriodicSet(offsets):
            return "periodic{" + ",".join(fr(d) for d in sorted(offsets)) + "}"
    raise TypeError(f"not a symbolic set: {S!r}")


def _as_interval(S: SymbolicSet) -> Optional[RatInterval]:
    if isinstance(S, RatInterval):
        return S
    if isinstance(S, BSegment):
        return S.as_interval()
    return None


def difference_pair(S: SymbolicSet, d: Fraction) -> Optional[tuple[Fraction, Fraction]]:
    """Return ``(s1, s2)`` in ``S`` with ``s1 - s2 == d``, or None if ``d`` is not in ``S - S``."""
    match S:
        case FiniteSet(elements):
            for s in sorted(elements):
                if s - d in elements:
                    return s, s - d
            return None
        case Lattice(c, b):
            return (c + d, c) if is_integer(d / b) else None
        case PeriodicSet(offsets):
            for o in sorted(offsets):
                t = frac_q(o - d)
                if t in offsets:
                    # o - t == d mod 1, so pick integer parts to make the difference exact
                    s2 = t
                    s1 = s2 + d
                    return s1, s2
            return None
    I = _as_interval(S)
    if I is None:
        raise TypeError(f"not a symbolic set: {S!r}")
    if I.is_empty:
        return None
    if not I.bounded:
        if I.lo is None and I.hi is None:
            return d, Fraction(0)
        # for a half-line, pick s2 one unit plus |d| inside the finite end
        s2 = I.lo + 1 + abs(d) if I.lo is not None else I.hi - 1 - abs(d)
        return s2 + d, s2
    w = I.length
    ad = abs(d)
    if ad > w or (ad == w and not (I.lo_closed and I.hi_closed)):
        return None
    if ad == w:
        hi_pt, lo_pt = I.hi, I.lo
    else:
        # choose the pair centred in the interval
        mid = (I.lo + I.hi) / 2
        hi_pt, lo_pt = mid + ad / 2, mid - ad / 2
    return (hi_pt, lo_pt) if d >= 0 else (lo_pt, hi_pt)


class DsumStatus(str, enum.Enum):
    VERIFIED_ANALYTIC = "verified_analytic"
    VERIFIED_EXHAUSTIVE = "verified_exhaustive"
    REFUTED = "refuted"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class DsumWitness:
    """An element of ``A + B`` with two distinct representations ``a1+b1 == a2+b2``."""

    element: Fraction
    first: tuple[Fraction, Fraction]
    second: tuple[Fraction, Fraction]

    def describe(self) -> str:
        fr = format_rational
        (a1, b1), (a2, b2) = self.first, self.second
        return f"{fr(self.element)} = {fr(a1)}+{fr(b1)} = {fr(a2)}+{fr(b2)}"

    def replays(self, A: SymbolicSet, B: SymbolicSet) -> bool:
        (a1, b1), (a2, b2) = self.first, self.second
        return (self.first != self.second and a1 + b1 == self.element == a2 + b2
                and membership(A, a1) and membership(A, a2)
                and membership(B, b1) and membership(B, b2))


@dataclass(frozen=True)
class DsumVerdict:
    status: DsumStatus
    witness: Optional[DsumWitness] = None
    rule: Optional[str] = None
    covers_line: Optional[bool] = None
    differences_tried: int = 0

    @property
    def direct(self) -> Optional[bool]:
        if self.status in (DsumStatus.VERIFIED_ANALYTIC, DsumStatus.VERIFIED_EXHAUSTIVE):
            return True
        if self.status is DsumStatus.REFUTED:
            return False
        return None

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "rule": self.rule,
            "covers_line": self.covers_line,
            "witness": None if self.witness is None else {
                "element": format_rational(self.witness.element),
                "representations": [[format_rational(a), format_rational(b)]
                                     for a, b in (self.witness.first, self.witness.second)],
            },
            "differences_tried": self.differences_tried,
        }


def brute_force_representations(A: FiniteSet, B: FiniteSet) -> dict[Fraction, list[tuple[Fraction, Fraction]]]:
    reps: dict[Fraction, list[tuple[Fraction, Fraction]]] = defaultdict(list)
    for a in A.sorted():
        for b in B.sorted():
            reps[a + b].append((a, b))
    return dict(sorted(reps.items()))


def is_direct_by_representations(A: FiniteSet, B: FiniteSet) -> bool:
    return all(len(r) == 1 for r in brute_force_representations(A, B).values())


def disjoint_translates(A: FiniteSet, B: FiniteSet) -> bool:
    """Translates ``a + B`` pairwise disjoint for distinct ``a`` in ``A``."""
    translates = [frozenset(a + b for b in B.elements) for a in A.sorted()]
    for s, t in itertools.combinations(translates, 2):
        if s & t:
            return False
    return True


def _common_difference_witness(A: SymbolicSet, B: SymbolicSet,
                               diffs: Iterable[tuple[Fraction, Fraction]]) -> tuple[Optional[DsumWitness], int]:
    tried = 0
    for a1, a2 in diffs:
        d = a1 - a2
        if d == 0:
            continue
        tried += 1
        pair = difference_pair(B, d)
        if pair is not None:
            b1, b2 = pair
            # a1 - a2 == b1 - b2  =>  a1 + b2 == a2 + b1
            return DsumWitness(a1 + b2, (a1, b2), (a2, b1)), tried
    return None, tried


def _finite_check(A: FiniteSet, B: FiniteSet) -> DsumVerdict:
    # (A-A) & (B-B) contained in {0}; for empty summands the sum is vacuously direct
    pairs = ((a1, a2) for a1 in A.sorted() for a2 in A.sorted() if a1 > a2)
    w, tried = _common_difference_witness(A, B, pairs)
    if w is not None:
        return DsumVerdict(DsumStatus.REFUTED, w, rule="finite (A-A)&(B-B)", covers_line=False,
                           differences_tried=tried)
    return DsumVerdict(DsumStatus.VERIFIED_EXHAUSTIVE, rule="finite (A-A)&(B-B)", covers_line=False,
                       differences_tried=tried)


def _analytic_rule(A: SymbolicSet, B: SymbolicSet) -> Optional[str]:
    for L, other in ((A, B), (B, A)):
        if isinstance(L, Lattice):
            I = _as_interval(other)
            if I is not None and I.bounded and I.length == L.b and I.lo_closed != I.hi_closed:
                if L.b == 1 and I.lo_closed:
                    return "c+Z with a unit [a,a+1) window"
                return "c+bZ with a half-open window of length b"
        if isinstance(L, FiniteSet) and len(L.elements) == 1 and other == REALS:
            return "singleton with the full line"
    return None


def _sample_differences(S: SymbolicSet, grid: GridSpec) -> list[tuple[Fraction, Fraction]]:
    """Pairs ``(s1, s2)`` of members of ``S`` whose differences the search will test."""
    if isinstance(S, FiniteSet):
        xs = S.sorted()
        return [(a1, a2) for a1 in xs for a2 in xs if a1 > a2]
    if isinstance(S, Lattice):
        kmax = max(1, int(2 * grid.range_bound / S.b) + 1)
        return [(S.c + k * S.b, S.c) for k in range(1, kmax + 1)]
    if isinstance(S, PeriodicSet):
        offs = sorted(S.offsets)
        pairs = [(o1 + k, o2) for o1 in offs for o2 in offs for k in range(0, int(grid.range_bound) + 1)]
        return [(p, q) for p, q in pairs if p != q]
    members = [x for x in grid.points() if membership(S, x)]
    if not members:
        return []
    anchor = members[0]
    return [(x, anchor) for x in members[1:]] + [(x, members[-1]) for x in members[:-1]]


def direct_sum_check(A: SymbolicSet, B: SymbolicSet, grid: Optional[GridSpec] = None) -> DsumVerdict:
    grid = grid or GridSpec()
    if isinstance(A, FiniteSet) and isinstance(B, FiniteSet):
        return _finite_check(A, B)
    rule = _analytic_rule(A, B)
    if rule is not None:
        return DsumVerdict(DsumStatus.VERIFIED_ANALYTIC, rule=rule, covers_line=True)
    # search differences on the side that is easier to enumerate
    total = 0
    for S, T, swap in ((A, B, False), (B, A, True)):
        w, tried = _common_difference_witness(S, T, _sample_differences(S, grid))
        total += tried
        if w is not None:
            if swap:
                (t1, s1), (t2, s2) = (w.first[1], w.first[0]), (w.second[1], w.second[0])
                w = DsumWitness(w.element, (t1, s1), (t2, s2))
            return DsumVerdict(DsumStatus.REFUTED, w, rule="sampled common difference",
                               differences_tried=total)
    return DsumVerdict(DsumStatus.UNKNOWN, rule="sampled common difference", differences_tried=total)


def lattice_window_projection(L: Lattice, window: RatInterval, x: Fraction) -> tuple[Fraction, Fraction]:
    """Split ``x = (c + b m) + t`` with ``t`` in a half-open window of length ``b``."""
    c, b = L.c, L.b
    if window.lo_closed:
        m = floor_q((x - c - window.lo) / b)
    else:
        m = -floor_q(-(x - c - window.hi) / b)
    pa = c + b * m
    return pa, x - pa


def projection(A: SymbolicSet, B: SymbolicSet, x) -> tuple[Fraction, Fraction]:
    """``(P_A(x), P_B(x))`` for a factorization with a known constructive split."""
    x = as_rational(x)
    if isinstance(A, FiniteSet) and isinstance(B, FiniteSet):
        reps = brute_force_representations(A, B).get(x)
        if reps is None:
            raise NotInSumSet(f"{format_rational(x)} is not in {to_dsl(A)} + {to_dsl(B)}")
        if len(reps) > 1:
            raise NoConstructiveProjection(f"{format_rational(x)} has {len(reps)} representations")
        return reps[0]
    if _analytic_rule(A, B) is None:
        raise NoConstructiveProjection(f"no constructive projection for {to_dsl(A)} (+) {to_dsl(B)}")
    if isinstance(A, Lattice):
        return lattice_window_projection(A, _as_interval(B), x)
    if isinstance(B, Lattice):
        pb, pa = lattice_window_projection(B, _as_interval(A), x)
        return pa, pb
    # singleton with the full line
    if isinstance(A, FiniteSet):
        (a,) = A.elements
        return a, x - a
    (b,) = B.elements
    return x - b, b


class FactorReason(str, enum.Enum):
    HALF_OPEN_BOUNDED = "HalfOpenBounded"
    FULL_LINE = "FullLine"
    CLOSED_OR_OPEN_BOUNDED = "ClosedOrOpenBounded"
    UNBOUNDED_PROPER = "UnboundedProper"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class FactorClassification:
    """``projection_pair`` is ``(P_complement, P_interval)``."""

    interval: RatInterval
    is_factor: bool
    reason: FactorReason
    complement: Optional[SymbolicSet] = None
    projection_pair: Optional[tuple[pf.FunctionSpec, pf.FunctionSpec]] = None

    def to_dict(self) -> dict:
        return {
            "interval": to_dsl(self.interval),
            "is_factor": self.is_factor,
            "reason": self.reason.value,
            "complement": None if self.complement is None else to_dsl(self.complement),
            "projection_pair": None if self.projection_pair is None else
            [pf.to_dsl(p) for p in self.projection_pair],
        }


def classify_interval(I: RatInterval) -> FactorClassification:
    """Decide whether ``I`` is a factor of the line and build its projections."""
    zero, one = Fraction(0), Fraction(1)
    if I.lo is None and I.hi is None:
        # R = {0} (+) R
        return FactorClassification(I, True, FactorReason.FULL_LINE, FiniteSet.of(0),
                                    (pf.star(pf.Identity()), pf.Identity()))
    if not I.bounded:
        return FactorClassification(I, False, FactorReason.UNBOUNDED_PROPER)
    alpha, beta = I.lo, I.hi
    w = beta - alpha
    if w == 0:
        if I.is_empty:
            return FactorClassification(I, False, FactorReason.DEGENERATE)
        const = pf.AffineConjugate(pf.Linear(zero), zero, one, alpha)
        return FactorClassification(I, True, FactorReason.DEGENERATE, REALS, (pf.star(const), const))
    if I.lo_closed and not I.hi_closed:
        # f(x) = {x}_w + alpha, values in [alpha, beta)
        p_int = pf.AffineConjugate(pf.BFrac(w), zero, one, alpha)
    elif I.hi_closed and not I.lo_closed:
        # g(x) = x - ceil_w(x) + beta, values in (alpha, beta]
        p_int = pf.AffineConjugate(pf.star(pf.BCeil(w)), zero, one, beta)
    else:
        return FactorClassification(I, False, FactorReason.CLOSED_OR_OPEN_BOUNDED)
    return FactorClassification(I, True, FactorReason.HALF_OPEN_BOUNDED, Lattice(-alpha, w),
                                (pf.star(p_int), p_int))


# Exact interval sets for the obstruction search: lists of (lo, hi, lo_closed, hi_closed).
_Iv = tuple


def _iv(I: RatInterval) -> _Iv:
    return (I.lo, I.hi, I.lo_closed, I.hi_closed)


def _iv_empty(a: _Iv) -> bool:
    lo, hi, lc, hc = a
    return lo > hi or (lo == hi and not (lc and hc))


def _iv_intersect(a: _Iv, b: _Iv) -> _Iv:
    if a[0] > b[0] or (a[0] == b[0] and not a[2]):
        lo, lc = a[0], a[2]
    else:
        lo, lc = b[0], b[2]
    if a[1] < b[1] or (a[1] == b[1] and not a[3]):
        hi, hc = a[1], a[3]
    else:
        hi, hc = b[1], b[3]
    return (lo, hi, lc, hc)


def _iv_minus(a: _Iv, b: _Iv) -> list[_Iv]:
    if _iv_empty(_iv_intersect(a, b)):
        return [] if _iv_empty(a) else [a]
    left = (a[0], b[0], a[2], not b[2])
    right = (b[1], a[1], not b[3], a[3])
    return [p for p in (left, right) if not _iv_empty(p)]


def _iv_pick(a: _Iv) -> Fraction:
    lo, hi, _, _ = a
    return lo if lo == hi else (lo + hi) / 2


@dataclass(frozen=True)
class ObstructionBranch:
    """One placement ``a + I`` of a tile through the probe point, and why it fails (or not)."""

    placement: Fraction
    kind: str  # "double" | "gap" | "open"
    point: Optional[Fraction] = None
    representations: Optional[tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]] = None


@dataclass(frozen=True)
class IntervalObstruction:
    interval: RatInterval
    probe: Fraction
    branches: tuple[ObstructionBranch, ...]

    @property
    def closed(self) -> bool:
        """Every examined placement ended in a double representation or an uncoverable gap."""
        return bool(self.branches) and all(b.kind != "open" for b in self.branches)

    def first_witness(self) -> Optional[ObstructionBranch]:
        return next((b for b in self.branches if b.kind != "open"), None)


def interval_obstruction(I: RatInterval, grid: Optional[GridSpec] = None) -> IntervalObstruction:
    """Bounded search for a complement ``A`` (normalized to contain 0) with ``R = A (+) I``.

    The probe point ``q`` is left uncovered by the tile ``I``; every grid
    placement ``a`` of a second tile covering ``q`` is examined.  A placement
    fails with a double representation when ``a + I`` meets ``I``, or with a
    gap point that no third tile can cover without overlapping the first two
    (decided exactly with interval arithmetic).
    """
    grid = grid or GridSpec()
    if not I.bounded or I.lo >= I.hi:
        raise ValueError("obstruction search needs a bounded interval with lo < hi")
    alpha, beta, w = I.lo, I.hi, I.hi - I.lo
    base = _iv(I)
    q = alpha if not I.lo_closed else beta + w
    # placements a with q in a + I: a in q - I
    reach = (q - beta, q - alpha, I.hi_closed, I.lo_closed)
    both_closed = I.lo_closed and I.hi_closed
    diff = (-w, w, both_closed, both_closed)  # I - I
    n = grid.denominator_bound
    candidates = sorted({reach[0] + k * (reach[1] - reach[0]) / n for k in range(n + 1)})
    branches = []
    for a in candidates:
        if not _in_interval(RatInterval(*reach), a):
            continue
        tile = (alpha + a, beta + a, I.lo_closed, I.hi_closed)
        meet = _iv_intersect(base, tile)
        if not _iv_empty(meet):
            e = _iv_pick(meet)
            branches.append(ObstructionBranch(a, "double", e, ((Fraction(0), e), (a, e - a))))
            continue
        left, right = (base, tile) if a > 0 else (tile, base)
        gap = (left[1], right[0], not left[3], not right[2])
        if _iv_empty(gap):
            branches.append(ObstructionBranch(a, "open"))
            continue
        m = _iv_pick(gap)
        allowed = [(m - beta, m - alpha, I.hi_closed, I.lo_closed)]
        for forbidden in (diff, (a - w, a + w, both_closed, both_closed)):
            allowed = [p for piece in allowed for p in _iv_minus(piece, forbidden)]
        if allowed:
            branches.append(ObstructionBranch(a, "open", m))
        else:
            branches.append(ObstructionBranch(a, "gap", m))
    return IntervalObstruction(I, q, tuple(branches))


def coperiodic_closure_check(A: SymbolicSet, grid: Optional[GridSpec] = None) -> CheckReport:
    """Check ``1 + A == A`` on the grid and, for periodic sets, directness of ``D + Z``."""
    grid = grid or GridSpec()
    checked = 0
    for x in grid.points():
        checked += 1
        inside, shifted = membership(A, x), membership(A, x + 1)
        if inside != shifted:
            return CheckReport("one_periodic_set", to_dsl(A), Verdict.REFUTED, checked, grid,
                               Witness((("x", x),), Fraction(int(inside)), Fraction(int(shifted))),
                               notes=("lhs/rhs are membership of x and x+1 (1 = member)",))
    notes = ["sampled membership of x and x+1 agrees on the grid"]
    if isinstance(A, PeriodicSet):
        offs = sorted(A.offsets)
        # offsets are stored reduced into [0,1), so distinct offsets are distinct mod 1
        assert len({frac_q(d) for d in offs}) == len(offs)
        notes.append("D + Z is direct: offsets pairwise distinct mod 1")
    return CheckReport("one_periodic_set", to_dsl(A), Verdict.UNKNOWN, checked, grid, notes=tuple(notes))


def unit_integer_projection(A: SymbolicSet) -> pf.FunctionSpec:
    """``P_Z`` for ``Q = Z (+) A`` when ``A`` is a half-open rational interval of length 1."""
    I = _as_interval(A)
    if I is None or not I.bounded or I.length != 1 or I.lo_closed == I.hi_closed:
        raise NotATransversal(f"{to_dsl(A)} is not a half-open unit interval, so Q != Z (+) A")
    zero, one = Fraction(0), Fraction(1)
    if I.lo_closed:
        return pf.AffineConjugate(pf.Floor(), -I.lo, one, zero)   # floor(x - lo)
    return pf.AffineConjugate(pf.Ceil(), -I.hi, one, zero)        # ceil(x - hi)


def unit_transversal_projection(A: SymbolicSet) -> pf.FunctionSpec:
    """``P_A = x - P_Z(x)`` for ``Q = Z (+) A``."""
    return pf.star(unit_integer_projection(A))
