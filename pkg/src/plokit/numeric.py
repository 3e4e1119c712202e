"""Exact rational scalars and open subintervals of [0, 1].

Every scalar in plokit is a :class:`fractions.Fraction`; ``Rat`` is just an
alias so signatures read naturally.  Fractions are always stored in lowest
terms with a positive denominator, which is exactly the canonical form we
want for equality and hashing.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInterval, ParseError, PreconditionViolated

Rat = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)

_RAT_RE = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


def rat(value) -> Fraction:
    """Coerce ``value`` to a Fraction.

    Strings must be ``"p"`` or ``"p/q"``; decimal notation is rejected so a
    serialized file can never smuggle in a rounded value.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _RAT_RE.match(text):
            raise ParseError(f"not a rational literal: {value!r}")
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise ParseError(f"zero denominator: {value!r}") from None
    raise TypeError(f"cannot make an exact rational from {type(value).__name__}")


def fmt_rat(q: Fraction) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(q)


class Relation(enum.Enum):
    DISJOINT = "disjoint"
    EQUAL = "equal"
    PROPER_SUB = "proper-sub"
    PROPER_SUP = "proper-sup"
    CROSSING = "crossing"

    def flipped(self) -> Relation:
        if self is Relation.PROPER_SUB:
            return Relation.PROPER_SUP
        if self is Relation.PROPER_SUP:
            return Relation.PROPER_SUB
        return self


@dataclass(frozen=True, order=True)
class Interval:
    """Open interval ``(left, right)`` with ``0 <= left < right <= 1``."""

    left: Fraction
    right: Fraction

    def __post_init__(self):
        left, right = rat(self.left), rat(self.right)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        if not (0 <= left < right <= 1):
            raise InvalidInterval(f"need 0 <= left < right <= 1, got ({left}, {right})")

    @property
    def length(self) -> Fraction:
        return self.right - self.left

    @property
    def midpoint(self) -> Fraction:
        return (self.left + self.right) / 2

    def __contains__(self, x) -> bool:
        return self.left < x < self.right

    def __str__(self):
        return f"({self.left}, {self.right})"


def length(A: Interval) -> Fraction:
    return A.right - A.left


def interval_relation(A: Interval, B: Interval) -> Relation:
    """How ``A`` sits relative to ``B``.

    Open intervals that only touch at an endpoint are DISJOINT.
    """
    if A.right <= B.left or B.right <= A.left:
        return Relation.DISJOINT
    if A.left == B.left and A.right == B.right:
        return Relation.EQUAL
    if B.left <= A.left and A.right <= B.right:
        return Relation.PROPER_SUB
    if A.left <= B.left and B.right <= A.right:
        return Relation.PROPER_SUP
    return Relation.CROSSING


def intersection(A: Interval, B: Interval) -> Interval | None:
    lo, hi = max(A.left, B.left), min(A.right, B.right)
    if lo < hi:
        return Interval(lo, hi)
    return None


def shares_end(A: Interval, B: Interval) -> bool:
    """True iff nested intervals ``A``, ``B`` have a common endpoint."""
    rel = interval_relation(A, B)
    if rel not in (Relation.EQUAL, Relation.PROPER_SUB, Relation.PROPER_SUP):
        raise PreconditionViolated(
            f"shares_end needs nested intervals, got {A} and {B} ({rel.value})", (A, B)
        )
    return A.left == B.left or A.right == B.right
