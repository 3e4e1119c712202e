"""Orderings on (signed) orbitals, towers, and transition-chain detection."""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass, field
from typing import Sequence

from .errors import PreconditionViolated
from .numeric import Interval, Relation, intersection, interval_relation
from .orbitals import GenSet, SignedOrbital, Word, format_word, image, orbitals, word_ball
from .plmap import PLMap, compose, conjugate


class Order(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class Tower:
    """Signed orbitals whose orbitals form a strict chain, smallest first."""

    elements: tuple[SignedOrbital, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        for p, q in zip(self.elements, self.elements[1:]):
            if interval_relation(p.orbital, q.orbital) is not Relation.PROPER_SUB:
                raise PreconditionViolated(
                    f"tower orbitals must be strictly increasing: {p.orbital} then {q.orbital}"
                )

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    @property
    def stack(self) -> list[Interval]:
        return [p.orbital for p in self.elements]

    @property
    def signatures(self) -> list[PLMap]:
        return [p.signature for p in self.elements]


@dataclass(frozen=True)
class ChainCertificate:
    """Two signed orbitals whose orbitals cross, with their overlap."""

    first: SignedOrbital
    second: SignedOrbital
    overlap: Interval

    def __post_init__(self):
        if interval_relation(self.first.orbital, self.second.orbital) is not Relation.CROSSING:
            raise PreconditionViolated("certificate orbitals do not cross")
        if intersection(self.first.orbital, self.second.orbital) != self.overlap:
            raise PreconditionViolated("certificate overlap is not the intersection")

    def verify(self) -> bool:
        """Re-check the certificate from its own data."""
        return (
            self.first.orbital in orbitals(self.first.signature)
            and self.second.orbital in orbitals(self.second.signature)
            and interval_relation(self.first.orbital, self.second.orbital) is Relation.CROSSING
            and intersection(self.first.orbital, self.second.orbital) == self.overlap
        )


def signed_orbitals(maps: Sequence[PLMap]) -> list[SignedOrbital]:
    return [SignedOrbital(A, f) for f in maps for A in orbitals(f)]


def compare_signed(p: SignedOrbital, q: SignedOrbital) -> Order:
    """Lexicographic order: inclusion of orbitals, then the trivial order on signatures."""
    rel = interval_relation(p.orbital, q.orbital)
    if rel is Relation.PROPER_SUB:
        return Order.LESS
    if rel is Relation.PROPER_SUP:
        return Order.GREATER
    if rel is Relation.EQUAL and p.signature == q.signature:
        return Order.EQUAL
    return Order.INCOMPARABLE


def downset(A: Interval, pool: Sequence[Interval]) -> list[Interval]:
    return [B for B in pool if interval_relation(B, A) is Relation.PROPER_SUB]


def upset(A: Interval, pool: Sequence[Interval]) -> list[Interval]:
    return [B for B in pool if interval_relation(B, A) is Relation.PROPER_SUP]


def _dedupe(pool: Sequence[SignedOrbital]) -> list[SignedOrbital]:
    seen = set()
    out = []
    for p in pool:
        key = (p.orbital, p.signature)
        if key not in seen:
            seen.add(key)
            out.append(p)
    return out


def _tower_key(t: Tower):
    return (
        t.elements[0].orbital.left,
        t.elements[0].orbital.right,
        len(t),
        [(p.orbital.left, p.orbital.right, p.signature.nodes) for p in t.elements],
    )


def maximal_towers(pool: Sequence[SignedOrbital]) -> list[Tower]:
    """All maximal chains of ``pool`` under :func:`compare_signed`.

    A maximal chain runs from a minimal element to a maximal one through
    covering steps, so we walk the cover graph from every minimal element.
    """
    items = _dedupe(pool)
    n = len(items)
    below = [[j for j in range(n) if compare_signed(items[j], items[i]) is Order.LESS] for i in range(n)]
    above = [[j for j in range(n) if i in below[j]] for i in range(n)]
    covers = []
    for i in range(n):
        ups = set(above[i])
        covers.append([j for j in above[i] if not any(k in ups for k in below[j])])
    towers = []

    def walk(path):
        top = path[-1]
        if not covers[top]:
            towers.append(Tower(tuple(items[k] for k in path)))
            return
        for j in covers[top]:
            walk(path + [j])

    for i in range(n):
        if not below[i]:
            walk([i])
    return sorted(towers, key=_tower_key)


def is_fundamental(pool: Sequence[SignedOrbital]) -> bool:
    from .orbitals import lies_in_fundamental_domain

    for p in pool:
        for q in pool:
            if interval_relation(p.orbital, q.orbital) is Relation.PROPER_SUB:
                if not lies_in_fundamental_domain(p.orbital, q):
                    return False
    return True


def conjugate_tower(T: Tower, c: PLMap) -> Tower:
    """``T^c``: each ``(A, a)`` goes to ``((A)c, a^c)``."""
    return Tower(tuple(SignedOrbital(image(p.orbital, c), conjugate(p.signature, c)) for p in T))


def comparison_matrix(elements: Sequence[SignedOrbital]) -> list[list[Order]]:
    return [[compare_signed(p, q) for q in elements] for p in elements]


@dataclass(frozen=True)
class ProductCheck:
    forward: PLMap
    backward: PLMap
    verified: bool


def product_orbital_check(chain: Sequence[SignedOrbital]) -> ProductCheck:
    """Multiply the signatures of a strict chain in both orders and check
    that the top orbital survives as an orbital of each product."""
    chain = list(chain)
    if not chain:
        raise PreconditionViolated("empty chain")
    for p, q in zip(chain, chain[1:]):
        if interval_relation(p.orbital, q.orbital) is not Relation.PROPER_SUB:
            raise PreconditionViolated(
                f"chain not strictly ascending at {p.orbital}, {q.orbital}", (p.orbital, q.orbital)
            )
    cert = detect_transition_chain([p.signature for p in chain])
    if cert is not None:
        raise PreconditionViolated("chain signatures form a transition chain", cert)
    forward = chain[0].signature
    for p in chain[1:]:
        forward = compose(forward, p.signature)
    backward = chain[-1].signature
    for p in reversed(chain[:-1]):
        backward = compose(backward, p.signature)
    top = chain[-1].orbital
    return ProductCheck(forward, backward, top in orbitals(forward) and top in orbitals(backward))


def _crossing_left_ends(spans: list[tuple[Interval, int]]) -> list:
    """Left endpoints ``b`` such that some orbital starting at ``b`` crosses an
    earlier-starting one.  Sweep by left endpoint keeping a heap of right
    endpoints of the intervals still open."""
    spans = sorted(spans, key=lambda s: (s[0].left, s[0].right))
    heap: list = []
    hits = []
    i = 0
    while i < len(spans):
        b = spans[i][0].left
        group = []
        while i < len(spans) and spans[i][0].left == b:
            group.append(spans[i][0])
            i += 1
        while heap and heap[0] <= b:
            heapq.heappop(heap)
        if heap and any(heap[0] < B.right for B in group):
            hits.append(b)
        for B in group:
            heapq.heappush(heap, B.right)
    return hits


def _first_certificate(elements: Sequence[SignedOrbital], owner: Sequence[int]):
    spans = [(p.orbital, k) for k, p in enumerate(elements)]
    hits = _crossing_left_ends(spans)
    if not hits:
        return None
    b = hits[0]
    best = None
    for j, q in enumerate(elements):
        if q.orbital.left != b:
            continue
        for i, p in enumerate(elements):
            if p.orbital.left < b < p.orbital.right < q.orbital.right:
                lo, hi = sorted((i, j), key=lambda k: (owner[k], k))
                key = (owner[lo], owner[hi], lo, hi)
                if best is None or key < best[0]:
                    best = (key, lo, hi)
    _, lo, hi = best
    p, q = elements[lo], elements[hi]
    return ChainCertificate(p, q, intersection(p.orbital, q.orbital)), lo, hi


def detect_transition_chain(maps: Sequence[PLMap]) -> ChainCertificate | None:
    """First crossing pair among the signed orbitals of ``maps``.

    "First" means least by (overlap left end, map indices, orbital
    positions).  ``None`` only says this finite set of maps has no
    transition chain; the group it generates may still have one.
    """
    elements = []
    owner = []
    for k, f in enumerate(maps):
        for A in orbitals(f):
            elements.append(SignedOrbital(A, f))
            owner.append(k)
    found = _first_certificate(elements, owner)
    return None if found is None else found[0]


@dataclass
class ChainSearch:
    """Outcome of a bounded word-ball search for a transition chain."""

    generators: str
    radius: int
    elements: int
    certificate: ChainCertificate | None = None
    words: tuple[Word, Word] | None = None
    labels: list[str] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.certificate is not None

    def describe(self) -> str:
        if self.certificate is None:
            return (
                f"no transition chain among {self.elements} elements within radius "
                f"{self.radius}; this does not prove the group is locally solvable"
            )
        w1, w2 = (format_word(w, self.labels) for w in self.words)
        c = self.certificate
        return (
            f"transition chain: {c.first.orbital} from [{w1}] crosses "
            f"{c.second.orbital} from [{w2}], overlap {c.overlap}"
        )


def search_transition_chain(G: GenSet, radius: int, cap: int | None = 20000) -> ChainSearch:
    """Look for a transition chain among elements of the word ball of ``G``.

    Radii are explored in increasing order and the search stops at the
    first radius producing a crossing.  Raises ``ResourceLimit`` if the ball
    exceeds ``cap`` distinct elements.
    """
    if radius < 1:
        raise PreconditionViolated("radius must be at least 1")
    words: list[Word] = []
    elements: list[SignedOrbital] = []
    owner: list[int] = []
    n_elements = 0
    current = 0
    for w, f in word_ball(G, radius, cap):
        if len(w) > current:
            found = _first_certificate(elements, owner)
            if found is not None:
                return _search_result(G, current, n_elements, found, words, owner)
            current = len(w)
        words.append(w)
        n_elements += 1
        for A in orbitals(f):
            elements.append(SignedOrbital(A, f))
            owner.append(len(words) - 1)
    found = _first_certificate(elements, owner)
    if found is not None:
        return _search_result(G, current, n_elements, found, words, owner)
    return ChainSearch(G.name, radius, n_elements, labels=list(G.labels))


def _search_result(G, radius, n_elements, found, words, owner):
    cert, lo, hi = found
    return ChainSearch(
        G.name,
        radius,
        n_elements,
        cert,
        (words[owner[lo]], words[owner[hi]]),
        labels=list(G.labels),
    )
