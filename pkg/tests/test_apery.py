import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from conftest import apery_box, semigroups
from simplicial_cm.apery import (
    MonomialIdeal,
    apery_set,
    class_count,
    ideal_height,
    make_class,
    partition_classes,
)
from simplicial_cm.closure import ambient_points_in_box
from simplicial_cm.oracle import enumerate_semigroup, naive_apery
from simplicial_cm.semigroup import build_semigroup

UNIT2 = MonomialIdeal(2, ((0, 0),))


def test_apery_examples(instances):
    assert apery_set(instances["worked"]) == [(0, 0), (F(1, 2), 2), (F(3, 2), 1)]
    assert apery_set(instances["N3"]) == [(0, 0, 0)]
    assert apery_set(instances["<2,3>"]) == [(0,), (F(3, 2),)]


def test_classical_apery_by_brute_force():
    # Ap(<2,3>, 2) = {0, 3}: elements s with s - 2 a gap, scanning up to 10
    elems = {2 * a + 3 * b for a in range(6) for b in range(4)}
    ap = sorted(s for s in range(11) if s in elems and s - 2 not in elems)
    assert ap == [0, 3]
    elems = {3 * a + 4 * b + 5 * c for a in range(5) for b in range(5) for c in range(5)}
    ap = sorted(s for s in range(16) if s in elems and s - 3 not in elems)
    assert ap == [0, 4, 5]
    S = build_semigroup([(3,), (4,), (5,)])
    assert [S.ambient(x) for x in apery_set(S)] == [(0,), (4,), (5,)]


def test_partition_worked(worked):
    classes = partition_classes(worked, apery_set(worked))
    assert [c.elements for c in classes] == [((0, 0),), ((F(1, 2), 2), (F(3, 2), 1))]
    assert [worked.ambient(c.shift) for c in classes] == [(0, 0), (1, 1)]
    assert classes[0].ideal == UNIT2
    assert set(classes[1].ideal.min_gens) == {(1, 0), (0, 1)}
    # lambda exponent (1,0) is t^(2,0) in ambient terms
    assert {worked.ambient(g) for g in classes[1].ideal.min_gens} == {(2, 0), (0, 1)}


def test_partition_singletons():
    S = build_semigroup([(3,), (4,), (5,)])
    classes = partition_classes(S, apery_set(S))
    assert [S.ambient(c.shift) for c in classes] == [(0,), (4,), (5,)]
    assert all(c.ideal.is_unit for c in classes)
    c = make_class([(F(1, 3), F(7, 3))])
    assert c.shift == (F(1, 3), F(7, 3)) and c.ideal == UNIT2


def test_class_count_examples(instances):
    assert class_count(instances["worked"]) == 2
    assert class_count(instances["N2"]) == 1
    assert class_count(instances["<2,3>"]) == 2


def test_ideal_height_examples():
    assert ideal_height(MonomialIdeal(2, ((0, 1), (1, 0)))) == 2
    assert ideal_height(MonomialIdeal(3, ((2, 1, 0),))) == 1
    assert ideal_height(UNIT2) == math.inf
    assert ideal_height(MonomialIdeal(3, ((1, 1, 0), (0, 1, 1), (1, 0, 1)))) == 2
    assert ideal_height(MonomialIdeal(3, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))) == 3


def test_minimal_generators_filter():
    I = MonomialIdeal.from_exponents(2, [(1, 0), (2, 3), (0, 4), (0, 5)])
    assert I.min_gens == ((0, 4), (1, 0))
    assert I.contains((1, 7)) and I.contains((0, 4)) and not I.contains((0, 3))


@settings(max_examples=25)
@given(semigroups())
def test_class_structure(S):
    ap = apery_set(S)
    classes = partition_classes(S, ap)
    assert sorted(e for c in classes for e in c.elements) == ap
    assert len(classes) == class_count(S)
    assert classes[0].shift == (0,) * S.rank
    for c in classes:
        for i in range(S.rank):
            assert all(c.shift[i] <= e[i] for e in c.elements)
            assert any(c.shift[i] == e[i] for e in c.elements)
            # some minimal generator of I_j avoids variable i
            assert any(g[i] == 0 for g in c.ideal.min_gens)
        if S.rank >= 2 and not c.ideal.is_unit:
            assert ideal_height(c.ideal) >= 2


@settings(max_examples=20)
@given(semigroups())
def test_every_element_is_apery_plus_a(S):
    ap = set(apery_set(S))
    bound = 3
    elems = enumerate_semigroup(S, bound)
    for lam in elems:
        assert any(
            all((a - b).denominator == 1 and a - b >= 0 for a, b in zip(lam, y)) for y in ap
        )


@settings(max_examples=20)
@given(semigroups())
def test_apery_matches_naive(S):
    assert set(apery_set(S)) == naive_apery(S, apery_box(S))


def test_rank_one_ideals_are_unit():
    for gens in ([(2,), (3,)], [(3,), (4,), (5,)], [(4,), (6,), (9,)], [(5,), (7,), (8,), (9,)]):
        S = build_semigroup(gens)
        assert all(c.ideal.is_unit for c in partition_classes(S, apery_set(S)))


@settings(max_examples=20)
@given(semigroups())
def test_walk_matches_bounded_enumeration(S):
    from simplicial_cm.apery import apery_candidates, in_apery

    cands = apery_candidates(S)
    assert apery_set(S) == sorted(c for c in cands if in_apery(S, c))
