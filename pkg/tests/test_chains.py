from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plokit import Interval
from plokit.chains import (
    ChainCertificate,
    Order,
    Tower,
    compare_signed,
    comparison_matrix,
    conjugate_tower,
    detect_transition_chain,
    downset,
    is_fundamental,
    maximal_towers,
    product_orbital_check,
    search_transition_chain,
    signed_orbitals,
    upset,
)
from plokit.constructions import crossing_pair, nested_tower, one_bump, wreath_generators
from plokit.errors import PreconditionViolated, ResourceLimit
from plokit.numeric import Relation, interval_relation, intersection, shares_end
from plokit.orbitals import GenSet, SignedOrbital, image, iter_words, orbitals, word_map
from plokit.plmap import IDENTITY, compose, conjugate, make_map

from conftest import intervals, pl_maps

FULL = Interval(0, 1)
QUARTER = Interval(F(1, 4), F(1, 2))


def so(A, f):
    return SignedOrbital(A, f)


def test_signed_orbitals(a, b):
    assert signed_orbitals([IDENTITY]) == []
    assert signed_orbitals([a]) == [so(FULL, a)]
    assert signed_orbitals([a, b]) == [so(FULL, a), so(QUARTER, b)]


def test_signed_orbital_validates(a):
    with pytest.raises(Exception):
        SignedOrbital(QUARTER, a)


def test_compare_signed(a, b):
    b2 = compose(b, b)
    assert compare_signed(so(QUARTER, b), so(FULL, a)) is Order.LESS
    assert compare_signed(so(FULL, a), so(QUARTER, b)) is Order.GREATER
    assert compare_signed(so(QUARTER, b), so(QUARTER, b)) is Order.EQUAL
    assert compare_signed(so(QUARTER, b), so(QUARTER, b2)) is Order.INCOMPARABLE
    f, g = crossing_pair()
    assert compare_signed(so(Interval(0, F(3, 4)), f), so(Interval(F(1, 4), 1), g)) is Order.INCOMPARABLE


def test_downset_upset():
    small = Interval(F(5, 16), F(3, 8))
    pool = [FULL, QUARTER, small]
    assert downset(FULL, pool) == [QUARTER, small]
    assert upset(small, pool) == [FULL, QUARTER]
    assert downset(QUARTER, [FULL]) == []
    assert FULL not in downset(FULL, pool) and FULL not in upset(FULL, pool)


def _maximal_chains_oracle(pool):
    # every subset that is a chain and cannot be extended by any other element
    def is_chain(s):
        return all(compare_signed(p, q) in (Order.LESS, Order.GREATER) for p, q in combinations(s, 2))

    chains = [set(s) for r in range(1, len(pool) + 1) for s in combinations(pool, r) if is_chain(s)]
    return [c for c in chains if not any(c < d for d in chains)]


def test_maximal_towers_examples(a, b):
    c = one_bump(Interval(F(1, 2), F(3, 4)))
    assert [len(t) for t in maximal_towers([so(FULL, a)])] == [1]
    towers = maximal_towers([so(FULL, a), so(QUARTER, b), so(Interval(F(1, 2), F(3, 4)), c)])
    assert [len(t) for t in towers] == [2, 2]
    assert [t.stack for t in towers] == [[QUARTER, FULL], [Interval(F(1, 2), F(3, 4)), FULL]]
    f, g = crossing_pair()
    assert [len(t) for t in maximal_towers(signed_orbitals([f, g]))] == [1, 1]


def test_maximal_towers_match_subset_oracle(a, b):
    G, _ = nested_tower(3)
    pool = signed_orbitals([word_map(G, w) for w in list(iter_words(len(G), 2))[:12]])
    pool = list(dict.fromkeys(pool))
    got = {frozenset(t.elements) for t in maximal_towers(pool)}
    want = {frozenset(c) for c in _maximal_chains_oracle(pool)}
    assert got == want


def test_downset_of_tower_need_not_be_a_stack(a, b):
    # b and b^a both sit below (0, 1) but are disjoint
    ba = conjugate(b, a)
    pool = [A for A in orbitals(a) + orbitals(b) + orbitals(ba)]
    below = downset(FULL, pool)
    assert interval_relation(below[0], below[1]) is Relation.DISJOINT


def test_is_fundamental(a, b):
    assert is_fundamental([so(FULL, a), so(QUARTER, b)])
    wide = one_bump(Interval(F(1, 8), F(7, 8)))
    assert not is_fundamental([so(FULL, a), so(Interval(F(1, 8), F(7, 8)), wide)])
    c = one_bump(Interval(F(1, 2), F(3, 4)))
    assert is_fundamental([so(QUARTER, b), so(Interval(F(1, 2), F(3, 4)), c)])


def test_conjugate_tower(a):
    _, T = nested_tower(2)
    assert conjugate_tower(T, IDENTITY) == T
    Tc = conjugate_tower(T, a)
    assert len(Tc) == 2
    assert interval_relation(Tc[0].orbital, Tc[1].orbital) is Relation.PROPER_SUB
    single = Tower((so(QUARTER, one_bump(QUARTER)),))
    c = make_map([(0, 0), (F(1, 3), F(1, 2)), (1, 1)])
    assert conjugate_tower(single, c)[0].orbital == image(QUARTER, c)


def test_product_orbital_check(a, b):
    res = product_orbital_check([so(QUARTER, b), so(FULL, a)])
    assert res.verified
    assert res.forward == compose(b, a) and res.backward == compose(a, b)
    assert FULL in orbitals(res.forward)
    assert product_orbital_check([so(FULL, a)]).verified
    _, T = nested_tower(3)
    assert product_orbital_check(list(T)).verified
    with pytest.raises(PreconditionViolated):
        product_orbital_check([so(FULL, a), so(QUARTER, b)])
    # orbitals nest, but a second bump of the lower signature crosses the upper one
    low = compose(b, one_bump(Interval(F(5, 8), F(7, 8))))
    high = one_bump(Interval(0, F(3, 4)))
    with pytest.raises(PreconditionViolated):
        product_orbital_check([so(QUARTER, low), so(Interval(0, F(3, 4)), high)])


def _brute_force_first_crossing(maps):
    # oracle: every pair, minimum by (overlap left end, map indices, positions)
    elems = [(k, i, A, f) for k, f in enumerate(maps) for i, A in enumerate(orbitals(f))]
    best = None
    for x in range(len(elems)):
        for y in range(x + 1, len(elems)):
            A, B = elems[x][2], elems[y][2]
            if interval_relation(A, B) is Relation.CROSSING:
                key = (intersection(A, B).left, elems[x][0], elems[y][0], x, y)
                if best is None or key < best[0]:
                    best = (key, x, y)
    if best is None:
        return None
    _, x, y = best
    return (elems[x][2], elems[x][3]), (elems[y][2], elems[y][3])


def test_detect_examples(a, b):
    assert detect_transition_chain([a, b]) is None
    assert detect_transition_chain([IDENTITY]) is None
    f, g = crossing_pair()
    cert = detect_transition_chain([f, g])
    assert cert.overlap == Interval(F(1, 4), F(3, 4))
    assert cert.first.signature == f and cert.second.signature == g
    assert cert.verify()


def test_certificate_rejects_non_crossing(a, b):
    with pytest.raises(PreconditionViolated):
        ChainCertificate(so(FULL, a), so(QUARTER, b), QUARTER)


@given(st.lists(pl_maps(max_interior=6), min_size=1, max_size=4))
@settings(max_examples=200)
def test_detect_matches_brute_force(maps):
    cert = detect_transition_chain(maps)
    want = _brute_force_first_crossing(maps)
    if want is None:
        assert cert is None
    else:
        assert cert is not None
        assert (cert.first.orbital, cert.first.signature) == want[0]
        assert (cert.second.orbital, cert.second.signature) == want[1]


def test_search_examples(a):
    f, g = crossing_pair()
    res = search_transition_chain(GenSet("x", [f, g]), 1)
    assert res.found and res.radius == 1 and res.words == ((1,), (2,))
    assert res.certificate.verify()
    G, _ = nested_tower(3)
    res = search_transition_chain(G, 3)
    assert not res.found
    assert res.elements == len({word_map(G, w) for w in iter_words(3, 3)})
    assert "does not prove" in res.describe()
    assert not search_transition_chain(GenSet("a", [a]), 5).found


def test_search_finds_hidden_chain(a):
    # a and a wide bump never cross, but a conjugate of the wide bump does
    wide = one_bump(Interval(F(1, 8), F(7, 8)))
    assert detect_transition_chain([a, wide]) is None
    res = search_transition_chain(GenSet("h", [a, wide]), 3)
    assert res.found
    w1, w2 = res.words
    G = GenSet("h", [a, wide])
    assert res.certificate.first.signature == word_map(G, w1)
    assert res.certificate.second.signature == word_map(G, w2)


def test_search_resource_limit():
    G, _ = nested_tower(3)
    with pytest.raises(ResourceLimit):
        search_transition_chain(G, 4, cap=50)
    with pytest.raises(PreconditionViolated):
        search_transition_chain(G, 0)


def test_search_over_wreath_is_clean():
    G = wreath_generators(Interval(F(5, 16), F(3, 8)), Interval(F(1, 4), F(1, 2)))
    assert not search_transition_chain(G, 3).found


# --- properties ------------------------------------------------------------


@given(pl_maps(), pl_maps())
def test_compare_signed_agrees_with_relation(f, g):
    for p in signed_orbitals([f]):
        for q in signed_orbitals([f, g]):
            rel = interval_relation(p.orbital, q.orbital)
            if p.signature == q.signature or rel is not Relation.EQUAL:
                assert (compare_signed(p, q) is Order.LESS) == (rel is Relation.PROPER_SUB)


def test_tower_subsets_are_towers():
    _, T = nested_tower(4)
    for r in range(1, 5):
        for sub in combinations(T.elements, r):
            t = Tower(sub)
            assert all(
                compare_signed(p, q) is Order.LESS for p, q in combinations(t.elements, 2)
            )


@given(pl_maps())
def test_conjugated_nested_tower_is_isomorphic(c):
    _, T = nested_tower(3)
    assert comparison_matrix(list(conjugate_tower(T, c))) == comparison_matrix(list(T))


@given(st.lists(intervals(), min_size=2, max_size=3))
@settings(max_examples=60, deadline=None)
def test_non_fundamental_pools_have_a_conjugate_crossing(ivs):
    # B strictly inside A but outside every fundamental domain: moving B once
    # along A's bump shifts its left end past B.left but not past B.right
    pool = [so(A, one_bump(A)) for A in dict.fromkeys(ivs)]
    nested = [
        (p, q)
        for p in pool
        for q in pool
        if interval_relation(p.orbital, q.orbital) is Relation.PROPER_SUB
    ]
    if any(shares_end(p.orbital, q.orbital) for p, q in nested):
        return
    if detect_transition_chain([p.signature for p in pool]) is None and not is_fundamental(pool):
        assert search_transition_chain(GenSet("p", [p.signature for p in pool]), 3).found
