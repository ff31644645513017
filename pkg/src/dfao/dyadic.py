"""Exact dyadic distances: zero or a power 2**-e, never a float.

The prefix metric on words takes only these values, so representing them
as an optional integer exponent keeps every comparison exact.  Ordering
follows the numeric value: the zero distance sorts below everything and
larger exponents sort below smaller ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

# Exponents stay well inside machine-integer range; words long enough to
# exceed this are rejected by size guards long before they get here.
MAX_EXPONENT = 2**31 - 1


@total_ordering
@dataclass(frozen=True)
class DyadicDistance:
    """Value 0 (exponent None) or 2**-exponent with exponent >= 0."""

    exponent: int | None

    def __post_init__(self):
        e = self.exponent
        if e is not None and not 0 <= e <= MAX_EXPONENT:
            raise ValueError(f"exponent out of range: {e}")

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    def as_fraction(self) -> Fraction:
        if self.exponent is None:
            return Fraction(0)
        return Fraction(1, 2**self.exponent)

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, DyadicDistance):
            return NotImplemented
        if self.exponent is None:
            return other.exponent is not None
        if other.exponent is None:
            return False
        return self.exponent > other.exponent

    def __str__(self) -> str:
        return str(self.as_fraction())


ZERO = DyadicDistance(None)


def pow2inv(exponent: int) -> DyadicDistance:
    """The distance 2**-exponent."""
    return DyadicDistance(exponent)
