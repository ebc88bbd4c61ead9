"""Decomposition of K[B] into shifted monomial ideals and the CM test."""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

from . import oracle
from .apery import AperyClass, MonomialIdeal, apery_set, partition_classes
from .errors import BoundTooSmall, InternalInconsistency
from .lattice import box_points, frac_part, fundamental_domain_points
from .semigroup import AffineSemigroup


@dataclass(frozen=True)
class Decomposition:
    """K[B] = sum_j I_j(-h_j), stored combinatorially."""

    classes: tuple
    shifts_ambient: tuple

    @property
    def f(self) -> int:
        return len(self.classes)

    @property
    def shifts(self) -> tuple:
        return tuple(c.shift for c in self.classes)

    @property
    def ideals(self) -> tuple:
        return tuple(c.ideal for c in self.classes)


@dataclass(frozen=True)
class CmReport:
    is_cm: bool
    # when not CM: (class index j, two distinct elements of that class)
    witness: Optional[tuple]
    shifts: tuple


def decompose(S: AffineSemigroup) -> Decomposition:
    classes = tuple(partition_classes(S, apery_set(S)))
    residues = [c.residue for c in classes]
    if len(set(residues)) != len(residues):
        raise InternalInconsistency("two shifts share a residue class")
    ambient = []
    for c in classes:
        h = S.ambient(c.shift)
        if any(isinstance(x, Fraction) for x in h):
            raise InternalInconsistency(f"shift {h} is not an integer point")
        ambient.append(h)
    return Decomposition(classes, tuple(ambient))


def is_cohen_macaulay(S: AffineSemigroup, dec: Optional[Decomposition] = None) -> CmReport:
    """K[B] is CM iff every Apery class is a singleton."""
    dec = dec or decompose(S)
    for j, c in enumerate(dec.classes):
        if len(c.elements) > 1:
            return CmReport(False, (j, c.elements[0], c.elements[1]), dec.shifts)
    return CmReport(True, None, dec.shifts)


def default_bound(dec: Decomposition) -> int:
    top = max(max(e) for c in dec.classes for e in c.elements)
    return int(2 * math.ceil(top) + 2)


def locate(dec: Decomposition, lam) -> list:
    """All (j, offset) with lam = h_j + offset and offset in the staircase of I_j."""
    hits = []
    for j, c in enumerate(dec.classes):
        off = tuple(a - b for a, b in zip(lam, c.shift))
        if any(x.denominator != 1 or x < 0 for x in off):
            continue
        off = tuple(int(x) for x in off)
        if c.ideal.contains(off):
            hits.append((j, off))
    return hits


def decomposition_failures(S: AffineSemigroup, dec: Decomposition, bound: Optional[int] = None):
    """Yield every lambda-point of G(B) in [0, bound]^d where the bijection breaks.

    A point belongs to B exactly when one summand covers it; membership is
    taken from the brute-force enumeration in ``oracle``.
    """
    bound = default_bound(dec) if bound is None else bound
    if bound < 1:
        raise ValueError("bound must be >= 1")
    for c in dec.classes:
        if not any(max(e) <= bound for e in c.elements):
            raise BoundTooSmall(f"no element of the class {c.residue} fits in box {bound}")
    in_b = oracle.enumerate_semigroup(S, bound)
    d = S.rank
    for w in fundamental_domain_points(S.group):
        for n in box_points(bound, d):
            lam = tuple(a + b for a, b in zip(w, n))
            if max(lam) > bound:
                continue
            hits = locate(dec, lam)
            expected = 1 if lam in in_b else 0
            if len(hits) != expected:
                yield lam, hits
                continue
            for j, off in hits:
                back = tuple(h + o for h, o in zip(dec.classes[j].shift, off))
                if back != lam or frac_part(back) != dec.classes[j].residue:
                    yield lam, hits


def verify_decomposition(S: AffineSemigroup, dec: Decomposition, bound: Optional[int] = None) -> bool:
    return next(iter(decomposition_failures(S, dec, bound)), None) is None


def with_classes(dec: Decomposition, classes) -> Decomposition:
    """Copy of ``dec`` with different classes (used to build broken decompositions in tests)."""
    return replace(dec, classes=tuple(classes))


def unit_decomposition(dec: Decomposition) -> Decomposition:
    """Replace every ideal by the unit ideal, keeping the shifts."""
    classes = [
        AperyClass((c.shift,), c.shift, MonomialIdeal(c.ideal.dim, ((0,) * c.ideal.dim,)))
        for c in dec.classes
    ]
    return with_classes(dec, classes)
