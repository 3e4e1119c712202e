"""Supports, orbitals, bumps, movement direction and fundamental domains."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import (
    NotAnOrbital,
    NotInOrbital,
    NotSameOrbital,
    PreconditionViolated,
    ResourceLimit,
)
from .numeric import Interval, Relation, interval_relation, rat
from .plmap import IDENTITY, PLMap, _canonical, compose, evaluate, invert


class Direction(enum.Enum):
    RIGHT = "right"
    LEFT = "left"


@dataclass(frozen=True)
class SignedOrbital:
    """A bump, written as the pair (orbital, signature)."""

    orbital: Interval
    signature: PLMap

    def __post_init__(self):
        if self.orbital not in orbitals(self.signature):
            raise NotAnOrbital(f"{self.orbital} is not an orbital of {self.signature!r}")

    def __str__(self):
        return f"({self.orbital}, {self.signature!r})"


@dataclass(frozen=True)
class HalfOpen:
    """Half-open interval ``[lo, hi)``."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not (0 <= self.lo < self.hi <= 1):
            raise PreconditionViolated(f"need 0 <= lo < hi <= 1, got [{self.lo}, {self.hi})")

    def __contains__(self, x) -> bool:
        return self.lo <= x < self.hi

    def contains_interval(self, A: Interval) -> bool:
        return self.lo <= A.left and A.right <= self.hi

    def __str__(self):
        return f"[{self.lo}, {self.hi})"


@dataclass
class GenSet:
    """A named finite generating set standing in for the subgroup it generates."""

    name: str
    generators: list[PLMap]
    labels: list[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.generators:
            raise PreconditionViolated("a generating set needs at least one generator")
        if not self.labels:
            self.labels = [f"g{i + 1}" for i in range(len(self.generators))]
        if len(self.labels) != len(self.generators):
            raise PreconditionViolated("one label per generator")

    def __len__(self):
        return len(self.generators)

    def duplicates(self) -> list[tuple[int, int]]:
        """Index pairs of generators that are equal as maps."""
        return [
            (i, j)
            for i in range(len(self.generators))
            for j in range(i + 1, len(self.generators))
            if self.generators[i] == self.generators[j]
        ]


def _fixed_points_and_gaps(f: PLMap):
    # Split [0,1] at nodes and at isolated fixed points; on each open gap
    # (x)f - x has constant sign.
    cuts = []
    for i in range(len(f.nodes) - 1):
        x0, y0 = f.nodes[i]
        x1, y1 = f.nodes[i + 1]
        cuts.append(x0)
        d0, d1 = y0 - x0, y1 - x1
        if (d0 < 0 < d1) or (d1 < 0 < d0):
            cuts.append(x0 + d0 * (x1 - x0) / (d0 - d1))
    cuts.append(f.xs[-1])
    return cuts


@lru_cache(maxsize=8192)
def _orbitals(f: PLMap) -> tuple[Interval, ...]:
    cuts = _fixed_points_and_gaps(f)
    result = []
    start = None
    for p, q in zip(cuts, cuts[1:]):
        mid = (p + q) / 2
        moving = evaluate(f, mid) != mid
        if moving and start is None:
            start = p
        if start is not None:
            if not moving:
                result.append(Interval(start, p))
                start = None
            elif evaluate(f, q) == q:
                result.append(Interval(start, q))
                start = None
    return tuple(result)


def orbitals(f: PLMap) -> list[Interval]:
    """Maximal open intervals moved by ``f``, ascending."""
    return list(_orbitals(f))


def support_contains(f: PLMap, x) -> bool:
    return any(x in A for A in _orbitals(f))


def _require_orbital(f: PLMap, A: Interval):
    if A not in _orbitals(f):
        raise NotAnOrbital(f"{A} is not an orbital of {f!r}")


def bump(f: PLMap, A: Interval) -> PLMap:
    """``f`` on ``A`` and the identity everywhere else."""
    _require_orbital(f, A)
    inner = [(x, y) for x, y in f.nodes if A.left < x < A.right]
    nodes = [(A.left, A.left)] + inner + [(A.right, A.right)]
    if A.left != 0:
        nodes.insert(0, (Fraction(0), Fraction(0)))
    if A.right != 1:
        nodes.append((Fraction(1), Fraction(1)))
    return _canonical(nodes)


def is_one_bump(f: PLMap) -> bool:
    return len(_orbitals(f)) == 1


def direction(f: PLMap, A: Interval) -> Direction:
    _require_orbital(f, A)
    m = A.midpoint
    return Direction.RIGHT if evaluate(f, m) > m else Direction.LEFT


def rightward(f: PLMap, A: Interval) -> PLMap:
    """``f`` or its inverse, whichever moves points right on ``A``."""
    return f if direction(f, A) is Direction.RIGHT else invert(f)


def image(A: Interval, f: PLMap) -> Interval:
    """``(A)f``; intervals go to intervals since ``f`` is increasing."""
    return Interval(evaluate(f, A.left), evaluate(f, A.right))


def fundamental_domain(x, f: PLMap, A: Interval) -> HalfOpen:
    """The fundamental domain of ``(A, f)`` at ``x``.

    Left movers are normalized so the result is always ``[lo, hi)`` with
    ``lo < hi``: ``[x, (x)f)`` for right movers, ``[(x)f, x)`` for left ones.
    """
    x = rat(x)
    _require_orbital(f, A)
    if x not in A:
        raise NotInOrbital(f"{x} is not in {A}")
    y = evaluate(f, x)
    return HalfOpen(x, y) if y > x else HalfOpen(y, x)


def lies_in_fundamental_domain(A: Interval, B: SignedOrbital) -> bool:
    """Whether ``A`` fits inside some fundamental domain of ``B``.

    Equivalent to the rightward-oriented image of ``A`` not meeting ``A``.
    """
    if interval_relation(A, B.orbital) is not Relation.PROPER_SUB:
        raise PreconditionViolated(f"{A} is not properly inside {B.orbital}", (A, B.orbital))
    h = rightward(B.signature, B.orbital)
    return evaluate(h, A.left) >= A.right


def group_orbitals(G: GenSet | Sequence[PLMap]) -> list[Interval]:
    """Components of the union of the generators' supports."""
    gens = G.generators if isinstance(G, GenSet) else G
    pieces = sorted(A for f in gens for A in _orbitals(f))
    merged: list[list[Fraction]] = []
    for A in pieces:
        if merged and A.left < merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], A.right)
        else:
            merged.append([A.left, A.right])
    return [Interval(lo, hi) for lo, hi in merged]


# --- words --------------------------------------------------------------

Word = tuple[int, ...]
"""A word in the generators: ``k`` stands for generator ``k`` (1-based),
``-k`` for its inverse."""


def letters(ngens: int) -> list[int]:
    """Alphabet in lexicographic order: g1, g1^-1, g2, g2^-1, ..."""
    return [s * k for k in range(1, ngens + 1) for s in (1, -1)]


def iter_words(ngens: int, radius: int) -> Iterator[Word]:
    """Freely reduced words of length <= radius, shortlex order, empty word first."""
    alphabet = letters(ngens)
    level: list[Word] = [()]
    yield ()
    for _ in range(radius):
        nxt = []
        for w in level:
            for a in alphabet:
                if w and w[-1] == -a:
                    continue
                nxt.append(w + (a,))
        yield from nxt
        level = nxt


def format_word(w: Word, labels: Sequence[str] | None = None) -> str:
    if not w:
        return "1"
    parts = []
    for a in w:
        name = labels[abs(a) - 1] if labels else f"g{abs(a)}"
        parts.append(name if a > 0 else f"{name}^-1")
    return " ".join(parts)


def word_map(G: GenSet, w: Word) -> PLMap:
    f = IDENTITY
    for a in w:
        g = G.generators[abs(a) - 1]
        f = compose(f, g if a > 0 else invert(g))
    return f


def _apply_letter(G: GenSet, inverses: list[PLMap], a: int, x: Fraction) -> Fraction:
    g = G.generators[a - 1] if a > 0 else inverses[-a - 1]
    return evaluate(g, x)


def find_mover(G: GenSet, x, y, radius: int) -> Word | None:
    """Shortest, then lexicographically first, word ``w`` with ``(x)w > y``.

    Only freely reduced words up to ``radius`` letters are tried; ``None``
    means nothing was found within that radius, not that no such element
    exists.
    """
    x, y = rat(x), rat(y)
    if not x < y:
        raise PreconditionViolated(f"find_mover needs x < y, got {x}, {y}")
    comps = group_orbitals(G)
    if not any(x in O and y in O for O in comps):
        raise NotSameOrbital(f"{x} and {y} are not in a common orbital of {G.name}")
    inverses = [invert(g) for g in G.generators]
    alphabet = letters(len(G))
    level: list[tuple[Word, Fraction]] = [((), x)]
    for _ in range(radius):
        nxt = []
        for w, p in level:
            for a in alphabet:
                if w and w[-1] == -a:
                    continue
                q = _apply_letter(G, inverses, a, p)
                if q > y:
                    return w + (a,)
                nxt.append((w + (a,), q))
        level = nxt
    return None


def word_ball(G: GenSet, radius: int, cap: int | None = None):
    """Distinct elements of the ball of given radius, each with its first word.

    Yields ``(word, map)`` in shortlex order of the first word reaching each
    element.  Raises :class:`ResourceLimit` once more than ``cap`` distinct
    elements have been produced.
    """
    gens = list(G.generators)
    inverses = [invert(g) for g in gens]
    alphabet = letters(len(gens))
    seen = {IDENTITY}
    yield (), IDENTITY
    level: list[tuple[Word, PLMap]] = [((), IDENTITY)]
    for _ in range(radius):
        nxt = []
        for w, f in level:
            for a in alphabet:
                if w and w[-1] == -a:
                    continue
                g = gens[a - 1] if a > 0 else inverses[-a - 1]
                h = compose(f, g)
                if h in seen:
                    continue
                seen.add(h)
                if cap is not None and len(seen) > cap:
                    raise ResourceLimit(f"word ball exceeded {cap} elements")
                nxt.append((w + (a,), h))
                yield w + (a,), h
        level = nxt


def sample_points(A: Interval, k: int = 7) -> list[Fraction]:
    """``k`` evenly spaced rationals strictly inside ``A``."""
    return [A.left + A.length * Fraction(i, k + 1) for i in range(1, k + 1)]


__all__ = [
    "Direction",
    "GenSet",
    "HalfOpen",
    "SignedOrbital",
    "bump",
    "direction",
    "find_mover",
    "format_word",
    "fundamental_domain",
    "group_orbitals",
    "image",
    "is_one_bump",
    "iter_words",
    "letters",
    "lies_in_fundamental_domain",
    "orbitals",
    "rightward",
    "sample_points",
    "support_contains",
    "word_ball",
    "word_map",
]
