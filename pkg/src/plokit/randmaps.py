"""Seeded random generators of maps, bumps, fundamental pairs and towers.

Coordinates come from rationals whose denominators divide 96, so random
data stays dyadic-plus-thirds and exact arithmetic stays cheap.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .chains import Tower
from .numeric import Interval
from .orbitals import SignedOrbital, fundamental_domain
from .plmap import PLMap, compose, invert, make_map

DENOMINATOR = 96
GRID = sorted({Fraction(k, DENOMINATOR) for k in range(1, DENOMINATOR)})
UNIT_GRID = [Fraction(0)] + GRID + [Fraction(1)]


def random_map(rng: random.Random, max_nodes: int = 12) -> PLMap:
    k = rng.randint(0, max_nodes - 2)
    xs = sorted(rng.sample(GRID, k))
    ys = sorted(rng.sample(GRID, k))
    return make_map([(0, 0), *zip(xs, ys), (1, 1)])


def random_interval(rng: random.Random, within: Interval | None = None) -> Interval:
    lo, hi = (within.left, within.right) if within else (Fraction(0), Fraction(1))
    s, t = sorted(rng.sample(UNIT_GRID, 2))
    return Interval(lo + (hi - lo) * s, lo + (hi - lo) * t)


def _below_diagonal_tail(rng, start, end, max_inner):
    # nodes strictly between start and (end, end), all strictly below the diagonal
    x0, y0 = start
    k = rng.randint(0, max_inner)
    fracs = sorted(set(rng.sample(GRID, k)))
    nodes = []
    for t in fracs:
        x = x0 + (end - x0) * t
        if nodes and x <= nodes[-1][0]:
            continue
        prev_y = nodes[-1][1] if nodes else y0
        y = prev_y + (x - prev_y) * rng.choice(GRID)
        nodes.append((x, y))
    return nodes


def random_bump(rng: random.Random, A: Interval, right: bool | None = None, max_inner: int = 4) -> PLMap:
    """A random one-bump map with orbital ``A``."""
    inner = _below_diagonal_tail(rng, (A.left, A.left), A.right, max_inner)
    if not inner:
        m = A.midpoint
        inner = [(m, A.left + (m - A.left) * rng.choice(GRID))]
    nodes = [(A.left, A.left), *inner, (A.right, A.right)]
    if A.left != 0:
        nodes.insert(0, (0, 0))
    if A.right != 1:
        nodes.append((1, 1))
    f = make_map(nodes)
    if right is None:
        right = rng.random() < 0.5
    return invert(f) if right else f


def random_multibump(rng: random.Random, max_bumps: int = 3) -> PLMap:
    """A product of bumps on pairwise disjoint random intervals."""
    k = rng.randint(1, max_bumps)
    cuts = sorted(rng.sample(UNIT_GRID, 2 * k))
    f = make_map([(0, 0), (1, 1)])
    for i in range(k):
        f = compose(f, random_bump(rng, Interval(cuts[2 * i], cuts[2 * i + 1])))
    return f


def random_inside(rng: random.Random, lo: Fraction, hi: Fraction) -> Interval:
    s, t = sorted(rng.sample(UNIT_GRID, 2))
    return Interval(lo + (hi - lo) * s, lo + (hi - lo) * t)


def random_fundamental_child(rng: random.Random, parent: SignedOrbital) -> SignedOrbital:
    """A random bump whose orbital sits inside a fundamental domain of ``parent``."""
    B, f = parent.orbital, parent.signature
    x = B.left + B.length * rng.choice(GRID)
    D = fundamental_domain(x, f, B)
    A = random_inside(rng, D.lo, D.hi)
    return SignedOrbital(A, random_bump(rng, A))


def random_fundamental_pair(rng: random.Random) -> tuple[SignedOrbital, SignedOrbital]:
    """``(small, big)`` with small's orbital in a fundamental domain of big."""
    B = random_interval(rng)
    big = SignedOrbital(B, random_bump(rng, B))
    return random_fundamental_child(rng, big), big


def random_tower(rng: random.Random, depth: int) -> Tower:
    B = random_interval(rng)
    levels = [SignedOrbital(B, random_bump(rng, B))]
    for _ in range(depth - 1):
        levels.append(random_fundamental_child(rng, levels[-1]))
    return Tower(tuple(reversed(levels)))


def bump_family(rng: random.Random, n: int, O: Interval, max_inner: int = 5) -> list[PLMap]:
    """``n`` pairwise distinct left-moving bumps on ``O``.

    Roughly half are made by keeping a prefix of an earlier member and
    regrowing the rest, so the family is full of maps that agree on an
    initial stretch and then bounce apart.
    """
    out: list[PLMap] = []
    seen: set[PLMap] = set()
    while len(out) < n:
        if out and rng.random() < 0.5:
            parent = rng.choice(out)
            nodes = [p for p in parent.nodes if O.left <= p[0] < O.right]
            keep = nodes[: rng.randint(1, len(nodes))]
        else:
            keep = [(O.left, O.left)]
        tail = _below_diagonal_tail(rng, keep[-1], O.right, max_inner)
        pts = keep + tail + [(O.right, O.right)]
        if len(pts) < 3:
            continue
        if O.left != 0:
            pts.insert(0, (0, 0))
        if O.right != 1:
            pts.append((1, 1))
        f = make_map(pts)
        if f not in seen:
            seen.add(f)
            out.append(f)
    return out
