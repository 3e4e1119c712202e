"""Elements of PLo(I) as canonical node lists, and their group algebra.

Maps act on the right: ``compose(f, g)`` is "first f, then g", so
``evaluate(compose(f, g), x) == evaluate(g, evaluate(f, x))``.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import EndpointsNotFixed, NotAnOrbital, NotMonotone, OutOfDomain
from .numeric import ONE, ZERO, Interval, rat

Node = tuple[Fraction, Fraction]


class PLMap:
    """A piecewise-linear orientation-preserving homeomorphism of [0, 1].

    Always in canonical form: starts at (0, 0), ends at (1, 1), both
    coordinates strictly increasing, and no interior node where the slope
    stays the same.  Two maps are equal iff their node tuples are equal.
    Build instances with :func:`make_map`.
    """

    __slots__ = ("nodes", "xs", "ys", "_hash", "_slopes")

    def __init__(self, nodes: Sequence[Node]):
        self.nodes = tuple(nodes)
        self.xs = tuple(x for x, _ in self.nodes)
        self.ys = tuple(y for _, y in self.nodes)
        self._hash = hash(self.nodes)
        self._slopes = None

    def __eq__(self, other):
        if not isinstance(other, PLMap):
            return NotImplemented
        return self.nodes == other.nodes

    def __hash__(self):
        return self._hash

    def __repr__(self):
        body = " ".join(f"{x},{y}" for x, y in self.nodes)
        return f"PLMap({body!r})"

    def __call__(self, x) -> Fraction:
        return evaluate(self, x)

    def __mul__(self, other: PLMap) -> PLMap:
        return compose(self, other)

    def __pow__(self, n: int) -> PLMap:
        return power(self, n)

    def inverse(self) -> PLMap:
        return invert(self)

    def is_identity(self) -> bool:
        return len(self.nodes) == 2

    def slopes(self) -> list[Fraction]:
        if self._slopes is None:
            xs, ys = self.xs, self.ys
            self._slopes = tuple((ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]) for i in range(len(xs) - 1))
        return list(self._slopes)


def _canonical(nodes: Sequence[Node]) -> PLMap:
    # drop interior nodes whose two neighbouring segments have the same slope
    slopes = [(y2 - y1) / (x2 - x1) for (x1, y1), (x2, y2) in zip(nodes, nodes[1:])]
    out, kept = [nodes[0]], [slopes[0]]
    for i in range(1, len(nodes) - 1):
        if slopes[i] != kept[-1]:
            out.append(nodes[i])
            kept.append(slopes[i])
    out.append(nodes[-1])
    f = PLMap(out)
    f._slopes = tuple(kept)
    return f


def make_map(nodes: Iterable) -> PLMap:
    """Validate a node list and return the canonical map it describes."""
    pts = [(rat(x), rat(y)) for x, y in nodes]
    if not pts:
        raise EndpointsNotFixed("empty node list")
    if pts[0] != (ZERO, ZERO) or pts[-1] != (ONE, ONE) or len(pts) < 2:
        raise EndpointsNotFixed(
            f"node list must start at (0,0) and end at (1,1), got {pts[0]} .. {pts[-1]}"
        )
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if not (x0 < x1 and y0 < y1):
            raise NotMonotone(f"nodes ({x0},{y0}) -> ({x1},{y1}) are not strictly increasing")
    return _canonical(pts)


IDENTITY = PLMap([(ZERO, ZERO), (ONE, ONE)])


def identity() -> PLMap:
    return IDENTITY


def _segment(xs: Sequence[Fraction], x: Fraction) -> int:
    i = bisect_right(xs, x) - 1
    return min(i, len(xs) - 2)


def evaluate(f: PLMap, x) -> Fraction:
    """``(x)f`` by exact interpolation on the segment containing ``x``."""
    x = rat(x)
    if not (0 <= x <= 1):
        raise OutOfDomain(f"{x} is outside [0, 1]")
    xs, ys = f.xs, f.ys
    i = _segment(xs, x)
    if x == xs[i]:
        return ys[i]
    return ys[i] + (x - xs[i]) * (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i])


def evaluate_inverse(f: PLMap, y) -> Fraction:
    """``(y)f^{-1}`` without building the inverse map."""
    y = rat(y)
    if not (0 <= y <= 1):
        raise OutOfDomain(f"{y} is outside [0, 1]")
    xs, ys = f.xs, f.ys
    i = _segment(ys, y)
    if y == ys[i]:
        return xs[i]
    return xs[i] + (y - ys[i]) * (xs[i + 1] - xs[i]) / (ys[i + 1] - ys[i])


def invert(f: PLMap) -> PLMap:
    return PLMap([(y, x) for x, y in f.nodes])


def compose(f: PLMap, g: PLMap) -> PLMap:
    """The map ``x -> ((x)f)g``."""
    if f.is_identity():
        return g
    if g.is_identity():
        return f
    # merge f's outputs with g's inputs; each node needs at most one interpolation
    fx, fy, gx, gy = f.xs, f.ys, g.xs, g.ys
    fs, gs = f._slopes or tuple(f.slopes()), g._slopes or tuple(g.slopes())
    nodes = [(fx[0], gy[0])]
    i = j = 1
    last_f, last_g = len(fx) - 1, len(gx) - 1
    while i < last_f or j < last_g:
        u, v = fy[i], gx[j]
        if u == v:
            nodes.append((fx[i], gy[j]))
            i += 1
            j += 1
        elif u < v:
            nodes.append((fx[i], gy[j - 1] + (u - gx[j - 1]) * gs[j - 1]))
            i += 1
        else:
            nodes.append((fx[i - 1] + (v - fy[i - 1]) / fs[i - 1], gy[j]))
            j += 1
    nodes.append((fx[-1], gy[-1]))
    return _canonical(nodes)


def power(f: PLMap, n: int) -> PLMap:
    if n < 0:
        f, n = invert(f), -n
    result = IDENTITY
    base = f
    while n:
        if n & 1:
            result = compose(result, base)
        n >>= 1
        if n:
            base = compose(base, base)
    return result


def conjugate(g: PLMap, c: PLMap) -> PLMap:
    """``g^c = c^{-1} g c``."""
    return compose(compose(invert(c), g), c)


def commutator(f: PLMap, g: PLMap) -> PLMap:
    """``[f, g] = f^{-1} g^{-1} f g``."""
    return compose(compose(compose(invert(f), invert(g)), f), g)


def breakpoints(f: PLMap) -> list[Fraction]:
    return list(f.xs[1:-1])


def affine_components(f: PLMap) -> list[tuple[tuple[Fraction, Fraction], Fraction]]:
    """Open segments between consecutive breakpoints, left to right, with slopes."""
    return [((f.xs[i], f.xs[i + 1]), s) for i, s in enumerate(f.slopes())]


def slope_right(f: PLMap, x) -> Fraction:
    """Slope of the affine component starting at or containing ``x`` (x < 1)."""
    i = _segment(f.xs, rat(x))
    return (f.ys[i + 1] - f.ys[i]) / (f.xs[i + 1] - f.xs[i])


def slope_left(f: PLMap, x) -> Fraction:
    """Slope of the affine component ending at or containing ``x`` (x > 0)."""
    i = max(bisect_left(f.xs, rat(x)) - 1, 0)
    return (f.ys[i + 1] - f.ys[i]) / (f.xs[i + 1] - f.xs[i])


def boundary_slopes(f: PLMap, O: Interval) -> tuple[Fraction, Fraction]:
    """Initial and terminal slopes of ``f`` on its orbital ``O``."""
    from .orbitals import orbitals

    if O not in orbitals(f):
        raise NotAnOrbital(f"{O} is not an orbital of {f!r}")
    return slope_right(f, O.left), slope_left(f, O.right)
