"""Finite versions of the countability constructions.

Witness intervals for towers, the (2/3)^n length classes, bouncepoints and
corners of pairs of maps, and the slope/bouncepoint code of a bump.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .chains import Tower, detect_transition_chain, is_fundamental
from .errors import ContextOrbitalMismatch, NotAnOrbital, PreconditionViolated
from .numeric import Interval, Relation, interval_relation, rat
from .orbitals import SignedOrbital, bump, orbitals, rightward
from .plmap import PLMap, compose, evaluate, evaluate_inverse, invert, slope_right

TWO_THIRDS = Fraction(2, 3)


# --- witness intervals ----------------------------------------------------


def _largest_below(below: Sequence[SignedOrbital]) -> SignedOrbital:
    return max(below, key=lambda p: p.orbital.length)


def _midpoint(B: Interval) -> Fraction:
    return B.midpoint


def witness_intervals(
    T: Tower,
    pick: Callable[[Sequence[SignedOrbital]], SignedOrbital] = _largest_below,
    point: Callable[[Interval], Fraction] = _midpoint,
) -> list[Interval]:
    """One interval per tower element, pairwise disjoint.

    For ``(A, f)`` with ``A = (a, b)`` and ``f`` oriented to move right:
    if nothing in the tower sits below ``A`` the witness is ``A``;
    otherwise choose ``B`` below ``A`` (``pick``) and ``x`` in ``B``
    (``point``) and return ``(a, (x)f^-1)``.  Any choice gives disjoint
    witnesses; the defaults (largest ``B``, midpoint) are just deterministic.
    """
    sigs = T.signatures
    cert = detect_transition_chain(sigs)
    if cert is not None:
        raise PreconditionViolated("tower signatures contain a transition chain", cert)
    if not is_fundamental(list(T)):
        raise PreconditionViolated("tower is not fundamental, so its group has a transition chain")
    out = []
    for k, (A, f) in enumerate((p.orbital, p.signature) for p in T):
        below = list(T.elements[:k])
        if not below:
            out.append(A)
            continue
        B = pick(below).orbital
        x = rat(point(B))
        if x not in B:
            raise PreconditionViolated(f"chosen point {x} is not in {B}")
        c = evaluate_inverse(rightward(f, A), x)
        out.append(Interval(A.left, c))
    return out


# --- length classes -------------------------------------------------------


@dataclass(frozen=True, order=True)
class LengthClass:
    """Class ``n`` holds lengths in ``((2/3)^n, (2/3)^(n-1)]``."""

    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("length classes start at 1")

    @property
    def lower(self) -> Fraction:
        return TWO_THIRDS**self.index

    @property
    def upper(self) -> Fraction:
        return TWO_THIRDS ** (self.index - 1)

    def __contains__(self, ell) -> bool:
        return self.lower < ell <= self.upper


def length_class_of(ell) -> LengthClass:
    ell = rat(ell)
    if not (0 < ell <= 1):
        raise ValueError(f"length must lie in (0, 1], got {ell}")
    # smallest n with (2/3)^n < ell: gallop, then bisect, all exact
    hi = 1
    while not TWO_THIRDS**hi < ell:
        hi *= 2
    lo = hi // 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if TWO_THIRDS**mid < ell:
            hi = mid
        else:
            lo = mid
    return LengthClass(hi)


def length_class(A: Interval) -> LengthClass:
    return length_class_of(A.length)


def chain_partition_check(pool: Sequence[Interval], O: Interval) -> bool:
    """Whether ``pool`` together with ``O`` is a chain under inclusion.

    Preconditions: every member meets ``O``, nothing crosses, and all
    lengths fall in the class of ``O``.  Under those the answer is always
    True; a False means something upstream is wrong.
    """
    cls = length_class(O)
    everything = list(pool) + [O]
    for A in pool:
        if interval_relation(A, O) is Relation.DISJOINT:
            raise PreconditionViolated(f"{A} does not meet {O}", (A, O))
        if length_class(A) != cls:
            raise PreconditionViolated(f"{A} is not in length class {cls.index}", (A, O))
    for i, A in enumerate(everything):
        for B in everything[i + 1 :]:
            if interval_relation(A, B) is Relation.CROSSING:
                raise PreconditionViolated(f"{A} crosses {B}", (A, B))
    return all(
        interval_relation(A, B) is not Relation.DISJOINT
        for i, A in enumerate(everything)
        for B in everything[i + 1 :]
    )


# --- bouncepoints and corners ---------------------------------------------


def bouncepoints(f: PLMap, g: PLMap) -> list[Fraction]:
    """Breakpoints of ``f`` or ``g`` where they agree and split immediately to the right."""
    out = []
    for b in sorted(set(f.xs[1:-1]) | set(g.xs[1:-1])):
        if evaluate(f, b) == evaluate(g, b) and slope_right(f, b) != slope_right(g, b):
            out.append(b)
    return out


def corners(f: PLMap, g: PLMap) -> list[Fraction]:
    """Points inside affine components of both maps where they agree and then split."""
    grid = sorted(set(f.xs) | set(g.xs))
    out = []
    for p, q in zip(grid, grid[1:]):
        dp = evaluate(f, p) - evaluate(g, p)
        dq = evaluate(f, q) - evaluate(g, q)
        if (dp < 0 < dq) or (dq < 0 < dp):
            out.append(p + dp * (q - p) / (dp - dq))
    return out


def endpoint_witness(b, f: PLMap, g: PLMap) -> bool:
    """Whether ``b`` is an end of some orbital of ``f g^-1``."""
    b = rat(b)
    return any(b in (A.left, A.right) for A in orbitals(compose(f, invert(g))))


# --- bump codes -----------------------------------------------------------


@dataclass(frozen=True)
class BumpCode:
    """Initial slope followed by (bouncepoint, slope leaving it) pairs."""

    initial_slope: Fraction
    steps: tuple[tuple[Fraction, Fraction], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        if self.initial_slope <= 0 or any(s <= 0 for _, s in self.steps):
            raise ValueError("slopes must be positive")
        pts = [b for b, _ in self.steps]
        if any(p >= q for p, q in zip(pts, pts[1:])):
            raise ValueError("bouncepoints must be strictly increasing")

    def as_sequence(self) -> tuple[Fraction, ...]:
        flat = [self.initial_slope]
        for b, s in self.steps:
            flat += [b, s]
        return tuple(flat)

    def __str__(self):
        return "(" + ", ".join(str(v) for v in self.as_sequence()) + ")"


def _code(fb: PLMap, O: Interval, others: Sequence[PLMap]) -> BumpCode:
    steps = []
    for b in fb.xs[1:-1]:
        if b not in O:
            continue
        y, s = evaluate(fb, b), slope_right(fb, b)
        # b is a breakpoint of fb, so this is the bouncepoint test for the pair
        if any(evaluate(g, b) == y and slope_right(g, b) != s for g in others):
            steps.append((b, s))
    return BumpCode(slope_right(fb, O.left), steps)


def _context_bumps(O: Interval, context: Sequence[PLMap]) -> list[PLMap]:
    out = []
    for g in context:
        if O not in orbitals(g):
            raise ContextOrbitalMismatch(f"context map {g!r} does not have orbital {O}")
        out.append(bump(g, O))
    return out


def bump_code(f: PLMap, O: Interval, context: Sequence[PLMap]) -> BumpCode:
    """Code of the bump of ``f`` on ``O`` relative to the bumps of ``context``.

    A breakpoint of ``f`` inside ``O`` is recorded, with the slope leaving
    it, when it is a bouncepoint of ``f`` against at least one context bump.
    """
    if O not in orbitals(f):
        raise NotAnOrbital(f"{O} is not an orbital of {f!r}")
    return _code(bump(f, O), O, _context_bumps(O, context))


@dataclass
class InjectivityReport:
    total: int
    distinct_codes: int
    collisions: list[tuple[int, int]] = field(default_factory=list)
    codes: list[BumpCode] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.collisions


def check_injectivity(bumps: Sequence[PLMap], O: Interval) -> InjectivityReport:
    """Encode every bump with the whole list as context and look for clashes.

    A collision is a pair of different maps with the same code.
    """
    bumps = list(bumps)
    for f in bumps:
        if orbitals(f) != [O]:
            raise PreconditionViolated(f"{f!r} is not a one-bump map on {O}")
    context = _context_bumps(O, bumps)
    codes = [_code(fb, O, context) for fb in context]
    first: dict[BumpCode, int] = {}
    collisions = []
    for i, code in enumerate(codes):
        if code in first:
            j = first[code]
            if bumps[i] != bumps[j]:
                collisions.append((j, i))
        else:
            first[code] = i
    return InjectivityReport(len(bumps), len(first), collisions, codes)
