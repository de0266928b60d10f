"""Finite rational domains that stand in for the real line in grid checks."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor, lcm
from typing import Iterator

EXHAUSTIVE = "exhaustive"
SAMPLED = "sampled"

DEFAULT_RANGE = Fraction(4)
DEFAULT_DENOM = 16


@dataclass(frozen=True)
class GridSpec:
    """Grid of rationals ``p/q`` with ``|p/q| <= range_bound`` and ``q <= denominator_bound``.

    Exhaustive grids enumerate every reduced such rational in ascending order
    and free variables range over their cartesian power.  Sampled grids draw
    ``sample_count`` independent tuples from a ``random.Random(seed)`` stream.
    """

    mode: str = EXHAUSTIVE
    range_bound: Fraction = DEFAULT_RANGE
    denominator_bound: int = DEFAULT_DENOM
    sample_count: int = 1000
    seed: int = 0

    def __post_init__(self):
        if self.mode not in (EXHAUSTIVE, SAMPLED):
            raise ValueError(f"unknown grid mode {self.mode!r}")
        object.__setattr__(self, "range_bound", Fraction(self.range_bound))
        if self.range_bound <= 0:
            raise ValueError("range bound must be positive")
        if self.denominator_bound < 1:
            raise ValueError("denominator bound must be a positive integer")
        if self.sample_count < 1:
            raise ValueError("sample count must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    @classmethod
    def exhaustive(cls, range_bound=DEFAULT_RANGE, denominator_bound=DEFAULT_DENOM) -> "GridSpec":
        return cls(EXHAUSTIVE, Fraction(range_bound), denominator_bound)

    @classmethod
    def sampled(cls, sample_count: int, seed: int = 0, range_bound=DEFAULT_RANGE,
                denominator_bound=DEFAULT_DENOM) -> "GridSpec":
        return cls(SAMPLED, Fraction(range_bound), denominator_bound, sample_count, seed)

    @property
    def is_exhaustive(self) -> bool:
        return self.mode == EXHAUSTIVE

    def points(self) -> tuple[Fraction, ...]:
        """Single-variable domain: the full grid, or ``sample_count`` draws."""
        if self.is_exhaustive:
            return exhaustive_points(self.range_bound, self.denominator_bound)
        return tuple(t[0] for t in self.tuples(1))

    def tuples(self, arity: int) -> Iterator[tuple[Fraction, ...]]:
        if self.is_exhaustive:
            return itertools.product(self.points(), repeat=arity)
        return iter(sampled_tuples(self, arity))

    def tuple_count(self, arity: int) -> int:
        if self.is_exhaustive:
            return len(self.points()) ** arity
        return self.sample_count

    def denominator_lcm(self) -> int:
        """Common denominator of every value a grid coordinate can take."""
        return lcm(*range(1, self.denominator_bound + 1))

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "R": _fmt(self.range_bound),
            "D": self.denominator_bound,
            "count": self.sample_count if not self.is_exhaustive else len(self.points()),
            "seed": self.seed if not self.is_exhaustive else None,
        }

    def describe(self) -> str:
        if self.is_exhaustive:
            return f"exhaustive R={_fmt(self.range_bound)} D={self.denominator_bound} ({len(self.points())} points)"
        return (f"sampled R={_fmt(self.range_bound)} D={self.denominator_bound} "
                f"n={self.sample_count} seed={self.seed}")


DEFAULT_GRID = GridSpec()


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@lru_cache(maxsize=64)
def exhaustive_points(range_bound: Fraction, denominator_bound: int) -> tuple[Fraction, ...]:
    pts = set()
    for q in range(1, denominator_bound + 1):
        top = floor(range_bound * q)
        for p in range(-top, top + 1):
            pts.add(Fraction(p, q))
    return tuple(sorted(pts))


def random_rational(rng: random.Random, range_bound: Fraction, denominator_bound: int) -> Fraction:
    q = rng.randint(1, denominator_bound)
    top = floor(range_bound * q)
    return Fraction(rng.randint(-top, top), q)


@lru_cache(maxsize=64)
def sampled_tuples(grid: GridSpec, arity: int) -> tuple[tuple[Fraction, ...], ...]:
    rng = random.Random(grid.seed)
    return tuple(
        tuple(random_rational(rng, grid.range_bound, grid.denominator_bound) for _ in range(arity))
        for _ in range(grid.sample_count)
    )
