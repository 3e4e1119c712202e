"""Named fixtures: model bump, rescaled bumps, nested towers, wreath and crossing pairs."""

from __future__ import annotations

from fractions import Fraction

from .chains import Tower
from .errors import CannotFit, PreconditionViolated, ResourceLimit
from .numeric import Interval, Relation, interval_relation
from .orbitals import GenSet, SignedOrbital, fundamental_domain, lies_in_fundamental_domain
from .plmap import PLMap, _canonical, make_map

MODEL_BUMP = make_map([(0, 0), (Fraction(1, 2), Fraction(1, 4)), (Fraction(3, 4), Fraction(1, 2)), (1, 1)])

MAX_TOWER_DEPTH = 64


def one_bump(A: Interval) -> PLMap:
    """The model bump squeezed affinely into ``A``, identity outside."""
    lo, L = A.left, A.length
    nodes = [(Fraction(0), Fraction(0))]
    nodes += [(lo + L * x, lo + L * y) for x, y in MODEL_BUMP.nodes]
    nodes.append((Fraction(1), Fraction(1)))
    # rescaled endpoints may coincide with 0 or 1
    deduped = [nodes[0]]
    for p in nodes[1:]:
        if p != deduped[-1]:
            deduped.append(p)
    return _canonical(deduped)


def crossing_pair() -> tuple[PLMap, PLMap]:
    return one_bump(Interval(0, Fraction(3, 4))), one_bump(Interval(Fraction(1, 4), 1))


def nested_tower(depth: int) -> tuple[GenSet, Tower]:
    """A fundamental tower of one-bump maps, each level inside a fundamental
    domain of the previous one taken at that level's midpoint."""
    if depth < 1:
        raise PreconditionViolated("depth must be at least 1")
    if depth > MAX_TOWER_DEPTH:
        raise ResourceLimit(f"nested_tower depth is capped at {MAX_TOWER_DEPTH}")
    A = Interval(0, 1)
    f = one_bump(A)
    levels = [SignedOrbital(A, f)]
    for _ in range(depth - 1):
        D = fundamental_domain(A.midpoint, f, A)
        A = Interval(D.lo, D.hi)
        f = one_bump(A)
        levels.append(SignedOrbital(A, f))
    gens = [p.signature for p in levels]
    G = GenSet(f"nested_tower({depth})", gens)
    return G, Tower(tuple(reversed(levels)))


def wreath_generators(inner: Interval, outer: Interval) -> GenSet:
    """Generators ``h``, ``f`` whose ``f``-conjugates of ``h`` have disjoint supports.

    ``f`` is the bump on ``outer``; ``h`` is the bump on ``inner``, first
    shrunk into a fundamental domain of ``f`` if it does not already fit.
    """
    if interval_relation(inner, outer) is not Relation.PROPER_SUB:
        raise PreconditionViolated(f"{inner} is not properly inside {outer}")
    f = one_bump(outer)
    top = SignedOrbital(outer, f)
    fit = inner
    if not lies_in_fundamental_domain(inner, top):
        x = inner.midpoint
        D = fundamental_domain(x, f, outer)
        lo, hi = max(inner.left, D.lo), min(inner.right, D.hi)
        if not lo < hi:
            raise CannotFit(f"{inner} has no room inside a fundamental domain of {outer}")
        fit = Interval(lo, hi)
        if not lies_in_fundamental_domain(fit, top):
            raise CannotFit(f"could not shrink {inner} into a fundamental domain of {outer}")
    return GenSet(f"wreath({fit}, {outer})", [one_bump(fit), f], ["h", "f"])
