from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from conftest import semigroups
from simplicial_cm.apery import AperyClass
from simplicial_cm.decomposition import (
    decompose,
    decomposition_failures,
    default_bound,
    is_cohen_macaulay,
    unit_decomposition,
    verify_decomposition,
    with_classes,
)
from simplicial_cm.errors import BoundTooSmall
from simplicial_cm.instances import WORKED_CLOSURE
from simplicial_cm.semigroup import build_semigroup


def test_decompose_worked(worked):
    dec = decompose(worked)
    assert dec.f == 2
    assert dec.shifts_ambient == ((0, 0), (1, 1))
    assert dec.ideals[0].is_unit
    assert {worked.ambient(g) for g in dec.ideals[1].min_gens} == {(2, 0), (0, 1)}


def test_decompose_small(instances):
    dec = decompose(instances["N2"])
    assert dec.f == 1 and dec.shifts_ambient == ((0, 0),) and dec.ideals[0].is_unit
    dec = decompose(instances["<2,3>"])
    assert dec.shifts_ambient == ((0,), (3,))
    assert all(I.is_unit for I in dec.ideals)


def test_cm_examples(instances):
    rep = is_cohen_macaulay(instances["worked"])
    assert not rep.is_cm
    j, a, b = rep.witness
    assert j == 1 and {a, b} == {(F(3, 2), 1), (F(1, 2), 2)}
    assert is_cohen_macaulay(instances["N3"]).is_cm
    closure = build_semigroup(WORKED_CLOSURE)
    rep = is_cohen_macaulay(closure)
    assert rep.is_cm and rep.witness is None
    assert rep.shifts == ((0, 0), (F(1, 2), 1))


def test_verify_examples(instances):
    S = instances["worked"]
    dec = decompose(S)
    assert verify_decomposition(S, dec, 6)
    assert verify_decomposition(instances["N2"], decompose(instances["N2"]), 3)
    c0, c1 = dec.classes
    swapped = with_classes(dec, [
        AperyClass(c0.elements, c1.shift, c0.ideal),
        AperyClass(c1.elements, c0.shift, c1.ideal),
    ])
    assert not verify_decomposition(S, swapped, 6)
    failures = dict(decomposition_failures(S, swapped, 6))
    assert (F(3, 2), 1) in failures or (0, 0) in failures


def test_verify_rejects_unit_ideals_when_not_cm(worked):
    # (1/2, 1) = h_2 is covered by T(-h_2) but is not in B
    assert not verify_decomposition(worked, unit_decomposition(decompose(worked)), 6)


def test_bound_too_small(worked):
    with pytest.raises(BoundTooSmall):
        verify_decomposition(worked, decompose(worked), 1)


def test_default_bound(worked):
    assert default_bound(decompose(worked)) == 6


@settings(max_examples=25)
@given(semigroups())
def test_decomposition_bijection(S):
    dec = decompose(S)
    assert len({c.residue for c in dec.classes}) == dec.f
    assert all(isinstance(v, int) for h in dec.shifts_ambient for v in h)
    assert verify_decomposition(S, dec)


@settings(max_examples=25)
@given(semigroups())
def test_cm_iff_unit_ideals(S):
    dec = decompose(S)
    cm = is_cohen_macaulay(S, dec).is_cm
    assert cm == all(I.is_unit for I in dec.ideals)
    assert cm == all(len(c.elements) == 1 for c in dec.classes)
    # replacing every I_j by T still describes B exactly when B is CM
    assert verify_decomposition(S, unit_decomposition(dec), default_bound(dec)) == cm
