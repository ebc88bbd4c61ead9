import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import semigroups
from simplicial_cm.apery import apery_set, ideal_height, partition_classes
from simplicial_cm.closure import (
    SaturationResult,
    ambient_points_in_box,
    check_minimality,
    cm_closure,
    in_saturation,
    is_subsemigroup,
    probe_minimality,
    same_semigroup,
    saturate,
    strictly_contained,
    verify_saturation,
)
from simplicial_cm.decomposition import decompose, is_cohen_macaulay
from simplicial_cm.errors import PointOutsideSaturation
from simplicial_cm.instances import WORKED_CLOSURE
from simplicial_cm.lattice import frac_part
from simplicial_cm.semigroup import build_semigroup


def test_closure_worked(worked):
    C = cm_closure(worked).closure
    assert same_semigroup(C, build_semigroup(WORKED_CLOSURE))
    assert [C.ambient(x) for x in apery_set(C)] == [(0, 0), (1, 1)]
    assert C.basis_vectors == worked.basis_vectors


def test_closure_trivial_cases(instances):
    N2 = instances["N2"]
    assert same_semigroup(cm_closure(N2).closure, N2)
    S = instances["<2,3>"]
    assert same_semigroup(cm_closure(S).closure, S)


def test_saturation_examples(worked, instances):
    sat = saturate(worked).saturation
    assert set(sat.generators) == {(2, 0), (0, 1), (1, 0)}
    assert same_semigroup(sat, instances["N2"])
    assert same_semigroup(saturate(instances["N2"]).saturation, instances["N2"])
    S = build_semigroup([(2, 0), (0, 2), (1, 1)])
    assert same_semigroup(saturate(S).saturation, S)
    assert set(saturate(S).saturation.generators) == {(2, 0), (0, 2), (1, 1)}


def test_verify_saturation_examples(worked, instances):
    assert verify_saturation(worked, saturate(worked), 4)
    assert verify_saturation(instances["N2"], saturate(instances["N2"]), 2)
    # drop the D-point (1,0)
    broken = SaturationResult(build_semigroup([(2, 0), (0, 1)]))
    assert not verify_saturation(worked, broken, 4)


def test_chain_worked(worked):
    C = cm_closure(worked).closure
    sat = saturate(worked).saturation
    assert strictly_contained(worked, C)
    assert strictly_contained(C, sat)
    assert is_subsemigroup(worked, worked)
    assert not is_subsemigroup(sat, worked)


def test_check_minimality_examples(worked, instances):
    v = check_minimality(worked, [(1, 0)])
    assert v.cm and v.contains_closure
    assert check_minimality(instances["<2,3>"], []).contains_closure
    assert not check_minimality(worked, []).cm
    with pytest.raises(PointOutsideSaturation):
        check_minimality(worked, [(-1, 0)])
    with pytest.raises(PointOutsideSaturation):
        check_minimality(build_semigroup([(2, 0), (0, 2)]), [(1, 0)])


def test_probe_worked(worked):
    summary = probe_minimality(worked, samples=60, seed=3)
    assert summary.ok and summary.cm_found > 0


@settings(max_examples=25)
@given(semigroups())
def test_chain_and_fixed_point(S):
    C = cm_closure(S).closure
    sat = saturate(S).saturation
    assert is_subsemigroup(S, C) and is_subsemigroup(C, sat)
    assert is_cohen_macaulay(S).is_cm == is_subsemigroup(C, S)
    assert same_semigroup(cm_closure(C).closure, C)
    assert sat.group == S.group


@settings(max_examples=25)
@given(semigroups())
def test_closure_classes_are_shift_singletons(S):
    dec = decompose(S)
    C = cm_closure(S).closure
    closure_classes = partition_classes(C, apery_set(C))
    assert [c.elements for c in closure_classes] == [(h,) for h in dec.shifts]
    assert [frac_part(c.shift) for c in closure_classes] == [c.residue for c in dec.classes]
    if S.rank >= 2:
        assert all(ideal_height(I) >= 2 for I in dec.ideals if not I.is_unit)


@settings(max_examples=15)
@given(semigroups())
def test_saturation_identity(S):
    sat = saturate(S)
    assert verify_saturation(S, sat, 2)
    assert is_cohen_macaulay(sat.saturation).is_cm


@settings(max_examples=15)
@given(semigroups(), st.integers(0, 2**16))
def test_minimality_probing(S, seed):
    assert probe_minimality(S, samples=10, seed=seed).ok


def test_extra_points_drawn_from_saturation(worked):
    pool = [x for x, _ in ambient_points_in_box(worked, 2) if in_saturation(worked, x)]
    assert (1, 0) in pool and (1, 1) in pool
    assert len(pool) == 15  # all of N^2 in [0,4] x [0,2]
