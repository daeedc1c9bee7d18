"""Exact bound verdicts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


def frac_json(x) -> dict:
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


@dataclass(frozen=True)
class BoundReport:
    """Verdict for a single inequality ``lhs <= rhs``, held as exact rationals."""

    name: str
    lhs: Fraction
    rhs: Fraction

    def __post_init__(self):
        for side in ("lhs", "rhs"):
            value = getattr(self, side)
            if not isinstance(value, Rational):
                raise TypeError(f"{side} must be an exact rational, got {type(value).__name__}")
            object.__setattr__(self, side, Fraction(value))

    @property
    def slack(self) -> Fraction:
        return self.rhs - self.lhs

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "lhs": frac_json(self.lhs),
            "rhs": frac_json(self.rhs),
            "slack": frac_json(self.slack),
            "holds": self.holds,
        }
