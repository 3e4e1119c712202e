"""Seeded property suites behind ``plokit verify``.

Each suite takes a ``random.Random`` and a size and returns a list of
:class:`Check` results.  With ``timings`` off the report depends only on
the suite names, seed and size, so two runs produce identical bytes.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import io as plio
from .chains import (
    comparison_matrix,
    conjugate_tower,
    detect_transition_chain,
    is_fundamental,
    product_orbital_check,
    search_transition_chain,
)
from .constructions import crossing_pair, nested_tower, wreath_generators
from .countability import (
    TWO_THIRDS,
    bouncepoints,
    check_injectivity,
    corners,
    endpoint_witness,
    length_class_of,
    witness_intervals,
)
from .errors import UnknownSuite
from .numeric import Interval, Relation, interval_relation
from .orbitals import GenSet, image, orbitals
from .plmap import IDENTITY, boundary_slopes, commutator, compose, conjugate, invert, power
from .randmaps import (
    bump_family,
    random_fundamental_pair,
    random_map,
    random_multibump,
    random_tower,
)


@dataclass
class Check:
    name: str
    passed: bool
    count: int = 0
    detail: str = ""


@dataclass
class SuiteResult:
    suite: str
    checks: list[Check]
    seconds: float | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


@dataclass
class Report:
    seed: int
    size: int
    suites: list[SuiteResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    def to_json(self) -> dict:
        out = {"seed": self.seed, "size": self.size, "passed": self.passed, "suites": []}
        for s in self.suites:
            entry = {"suite": s.suite, "passed": s.passed, "checks": [asdict(c) for c in s.checks]}
            if s.seconds is not None:
                entry["seconds"] = round(s.seconds, 3)
            out["suites"].append(entry)
        return out

    def to_text(self) -> str:
        lines = [f"seed={self.seed} size={self.size}"]
        for s in self.suites:
            timing = f" ({s.seconds:.2f}s)" if s.seconds is not None else ""
            lines.append(f"[{'PASS' if s.passed else 'FAIL'}] {s.suite}{timing}")
            for c in s.checks:
                mark = "ok  " if c.passed else "FAIL"
                extra = f" - {c.detail}" if c.detail else ""
                lines.append(f"    {mark} {c.name} (n={c.count}){extra}")
        lines.append("all checks passed" if self.passed else "SOME CHECKS FAILED")
        return "\n".join(lines) + "\n"


def _brute_force_crossings(maps):
    # independent of the sweep in chains: plain double loop
    elems = [(k, A, f) for k, f in enumerate(maps) for A in orbitals(f)]
    return [
        (A, B)
        for i, (k, A, _) in enumerate(elems)
        for (l, B, _) in elems[i + 1 :]
        if interval_relation(A, B) is Relation.CROSSING
    ]


def suite_group_axioms(rng: random.Random, size: int) -> list[Check]:
    assoc = inverse = powers = True
    for _ in range(size):
        f, g, h = (random_map(rng) for _ in range(3))
        assoc &= compose(compose(f, g), h) == compose(f, compose(g, h))
        inverse &= compose(f, invert(f)) == IDENTITY and compose(invert(f), f) == IDENTITY
        m, n = rng.randint(-3, 3), rng.randint(-3, 3)
        powers &= power(f, m + n) == compose(power(f, m), power(f, n))
    return [
        Check("associativity", assoc, size),
        Check("inverses", inverse, size),
        Check("power addition", powers, size),
    ]


def suite_conjugation(rng: random.Random, size: int) -> list[Check]:
    orbit_ok = slope_ok = tower_ok = True
    for _ in range(size):
        g = random_multibump(rng) if rng.random() < 0.5 else random_map(rng)
        c = random_map(rng)
        gc = conjugate(g, c)
        orbit_ok &= orbitals(gc) == [image(A, c) for A in orbitals(g)]
        for A in orbitals(g):
            slope_ok &= boundary_slopes(g, A) == boundary_slopes(gc, image(A, c))
        T = random_tower(rng, rng.randint(1, 4))
        tower_ok &= comparison_matrix(list(T)) == comparison_matrix(list(conjugate_tower(T, c)))
    return [
        Check("orbitals of conjugate are images", orbit_ok, size),
        Check("boundary slopes preserved", slope_ok, size),
        Check("conjugated towers order-isomorphic", tower_ok, size),
    ]


def suite_fundamental(rng: random.Random, size: int) -> list[Check]:
    nested_ok = True
    for d in range(1, 7):
        _, T = nested_tower(d)
        pc = product_orbital_check(list(T))
        nested_ok &= is_fundamental(list(T)) and pc.verified
    pair_ok = True
    for _ in range(size):
        small, big = random_fundamental_pair(rng)
        pair_ok &= is_fundamental([small, big]) and product_orbital_check([small, big]).verified
    return [
        Check("nested towers depth 1..6", nested_ok, 6),
        Check("random fundamental pairs", pair_ok, size),
    ]


def suite_transition_chains(rng: random.Random, size: int) -> list[Check]:
    agree = True
    for _ in range(size):
        maps = [random_multibump(rng) for _ in range(rng.randint(1, 4))]
        cert = detect_transition_chain(maps)
        brute = _brute_force_crossings(maps)
        if cert is None:
            agree &= not brute
        else:
            agree &= cert.verify() and bool(brute)
            agree &= cert.overlap.left == min(max(A.left, B.left) for A, B in brute)
    f, g = crossing_pair()
    hit = search_transition_chain(GenSet("crossing", [f, g]), 1)
    nested = search_transition_chain(nested_tower(3)[0], 3)
    return [
        Check("detector agrees with brute force", agree, size),
        Check("crossing pair certified at radius 1", hit.found and hit.radius == 1, 1),
        Check("nested_tower(3) clean at radius 3", not nested.found, nested.elements),
    ]


def suite_witness(rng: random.Random, size: int) -> list[Check]:
    def choices(r):
        return [
            {},
            {"pick": lambda below: below[0]},
            {
                "pick": lambda below: r.choice(list(below)),
                "point": lambda B: B.left + B.length * Fraction(r.randint(1, 95), 96),
            },
        ]

    ok = True
    n = 0
    for _ in range(size):
        T = random_tower(rng, rng.randint(1, 6))
        for kw in choices(rng):
            W = witness_intervals(T, **kw)
            n += 1
            ok &= all(
                interval_relation(A, B) is Relation.DISJOINT
                for i, A in enumerate(W)
                for B in W[i + 1 :]
            )
    return [Check("witness intervals pairwise disjoint", ok, n)]


def suite_length_partition(rng: random.Random, size: int) -> list[Check]:
    ok = True
    pts = [TWO_THIRDS**k for k in range(21)]
    pts += [Fraction(rng.randint(1, 10**6), 10**6) for _ in range(size)]
    for ell in pts:
        n = length_class_of(ell).index
        ok &= TWO_THIRDS**n < ell <= TWO_THIRDS ** (n - 1)
    return [Check("length classes exact", ok, len(pts))]


def suite_bouncepoints(rng: random.Random, size: int) -> list[Check]:
    witness_ok = converse_ok = True
    for _ in range(size):
        f, g = random_map(rng, 8), random_map(rng, 8)
        found = set(bouncepoints(f, g)) | set(corners(f, g))
        witness_ok &= all(endpoint_witness(b, f, g) for b in found)
        starts = {A.left for A in orbitals(compose(f, invert(g))) if A.left > 0}
        converse_ok &= starts <= found
    f, g = crossing_pair()
    return [
        Check("bouncepoints and corners are orbital ends", witness_ok, size),
        Check("orbital starts are bouncepoints or corners", converse_ok, size),
        Check("crossing pair corner is 7/12", corners(f, g) == [Fraction(7, 12)], 1),
    ]


def suite_phi_injectivity(rng: random.Random, size: int) -> list[Check]:
    O = Interval(0, 1)
    fam = bump_family(rng, size, O)
    rep = check_injectivity(fam, O)
    return [
        Check(
            "bump codes injective",
            rep.ok and rep.distinct_codes == rep.total,
            rep.total,
            f"{rep.distinct_codes} distinct codes, {len(rep.collisions)} collisions",
        )
    ]


def suite_wreath(rng: random.Random, size: int) -> list[Check]:
    fixtures = [
        (Interval(Fraction(5, 16), Fraction(3, 8)), Interval(Fraction(1, 4), Fraction(1, 2))),
        (Interval(Fraction(1, 8), Fraction(7, 8)), Interval(0, 1)),
        (Interval(Fraction(1, 3), Fraction(2, 3)), Interval(Fraction(1, 6), Fraction(5, 6))),
    ]
    ok = True
    for inner, outer in fixtures:
        h, f = wreath_generators(inner, outer).generators
        conj = {i: conjugate(h, power(f, i)) for i in range(-3, 4)}
        ok &= all(commutator(conj[i], conj[j]) == IDENTITY for i in conj for j in conj if i != j)
    return [Check("f-conjugates of h commute", ok, len(fixtures))]


def suite_io(rng: random.Random, size: int) -> list[Check]:
    ok = True
    for _ in range(size):
        f = random_map(rng)
        ok &= plio.parse_map(plio.serialize_map(f)) == f
        doc = plio.MapDocument.from_map("f", f)
        ok &= plio.MapDocument.from_json(doc.to_json()).to_map() == f
    return [Check("parse/serialize round trip", ok, size)]


SUITES: dict[str, Callable[[random.Random, int], list[Check]]] = {
    "group-axioms": suite_group_axioms,
    "conjugation": suite_conjugation,
    "fundamental": suite_fundamental,
    "transition-chains": suite_transition_chains,
    "witness": suite_witness,
    "length-partition": suite_length_partition,
    "bouncepoints": suite_bouncepoints,
    "phi-injectivity": suite_phi_injectivity,
    "wreath": suite_wreath,
    "io": suite_io,
}


def run_verify(suites: Iterable[str], seed: int, size: int, timings: bool = False) -> Report:
    names = list(suites)
    for name in names:
        if name not in SUITES:
            raise UnknownSuite(name)
    report = Report(seed, size)
    for name in sorted(set(names), key=list(SUITES).index):
        rng = random.Random(f"{seed}:{name}")
        t0 = time.perf_counter()
        checks = SUITES[name](rng, size)
        elapsed = time.perf_counter() - t0 if timings else None
        report.suites.append(SuiteResult(name, checks, elapsed))
    return report
