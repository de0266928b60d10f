"""Three-valued check reports and their text/JSON renderings."""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from .exactnum import format_rational
from .grid import GridSpec


class Verdict(str, enum.Enum):
    VERIFIED = "verified"
    REFUTED = "refuted"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Witness:
    """A concrete failing assignment.

    ``relation`` says how the recorded sides fail: ``"!="`` for an equation
    whose sides differ, ``"not in"`` for a value outside a target set.
    """

    vars: tuple[tuple[str, Fraction], ...]
    lhs: Optional[Fraction]
    rhs: Optional[Fraction] = None
    relation: str = "!="
    target: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "vars": {name: format_rational(v) for name, v in self.vars},
            "lhs": None if self.lhs is None else format_rational(self.lhs),
            "rhs": None if self.rhs is None else format_rational(self.rhs),
            "relation": self.relation,
            **({"target": self.target} if self.target is not None else {}),
        }

    def describe(self) -> str:
        assign = ", ".join(f"{n}={format_rational(v)}" for n, v in self.vars)
        if self.relation == "not in":
            return f"{assign}: {format_rational(self.lhs)} not in {self.target}"
        return f"{assign}: lhs={format_rational(self.lhs)} rhs={format_rational(self.rhs)}"


@dataclass(frozen=True)
class CheckReport:
    equation: str
    function: str
    verdict: Verdict
    points_checked: int
    grid: Optional[GridSpec] = None
    witness: Optional[Witness] = None
    notes: tuple[str, ...] = ()
    details: dict = field(default_factory=dict, compare=True)
    error: Optional[str] = None

    def __post_init__(self):
        if self.verdict is Verdict.REFUTED and self.witness is None:
            raise ValueError("a refuted report needs a witness")

    @property
    def refuted(self) -> bool:
        return self.verdict is Verdict.REFUTED

    @property
    def exit_code(self) -> int:
        if self.error is not None:
            return 2
        return 1 if self.refuted else 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "equation": self.equation,
            "function": self.function,
            "grid": None if self.grid is None else self.grid.to_dict(),
            "verdict": self.verdict.value,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "points_checked": self.points_checked,
            "notes": list(self.notes),
            "details": {k: _jsonable(v) for k, v in self.details.items()},
            "error": self.error,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"check {self.equation} for {self.function}"]
        if self.grid is not None:
            lines.append(f"grid: {self.grid.describe()}")
        label = {
            Verdict.VERIFIED: "verified",
            Verdict.REFUTED: "refuted",
            Verdict.UNKNOWN: "unknown (no counterexample found)",
        }[self.verdict]
        if self.error is not None:
            label = "unknown (error)"
        lines.append(f"verdict: {label}")
        if self.witness is not None:
            lines.append(f"witness: {self.witness.describe()}")
        lines.append(f"points checked: {self.points_checked}")
        for k, v in self.details.items():
            lines.append(f"{k}: {_jsonable(v)}")
        for note in self.notes:
            lines.append(f"note: {note}")
        if self.error is not None:
            lines.append(f"error: {self.error}")
        return "\n".join(lines)


def _jsonable(v):
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v
