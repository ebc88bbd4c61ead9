"""Brute-force reference computations.

Nothing here reuses the membership search, the Apery enumeration or the
lattice code of the main modules; lambda-coordinates are recomputed with
sympy so that a bug in the package solver cannot leak into the oracle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import sympy

from .errors import BoxTooSmall


@dataclass(frozen=True)
class EnumerationBox:
    """Cap on every lambda-coordinate: the box is [0, bound]^d."""

    bound: int

    def __post_init__(self):
        if self.bound < 1:
            raise ValueError("bound must be >= 1")


def _as_box(box) -> EnumerationBox:
    return box if isinstance(box, EnumerationBox) else EnumerationBox(int(box))


def oracle_lambdas(S) -> list:
    """lambda-coordinates of every generator of S, via sympy."""
    E = sympy.Matrix([list(S.generators[i]) for i in S.basis]).T
    out = []
    for g in S.generators:
        sol, params = E.gauss_jordan_solve(sympy.Matrix(list(g)))
        assert params.shape[0] == 0
        out.append(tuple(Fraction(int(x.p), int(x.q)) for x in sol))
    return out


def enumerate_semigroup(S, box) -> set:
    """All lambda-vectors of B inside the box, by saturating {0} under +generators."""
    box = _as_box(box)
    gens = oracle_lambdas(S)
    d = len(S.basis)
    zero = (Fraction(0),) * d
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(a + b for a, b in zip(p, g))
                if max(q) <= box.bound and q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def _apery_in(pts: set, d: int) -> set:
    out = set()
    for p in pts:
        if all(tuple(p[j] - (1 if j == i else 0) for j in range(d)) not in pts
               for i in range(d)):
            out.add(p)
    return out


def naive_apery(S, box) -> set:
    """B_A read off literally: x in B with x - e_i not in B for all i.

    B_A is closed under removing a generator summand, so a chain of
    generators leads from 0 to any of its elements inside B_A.  If some
    element left the box, the chain's first exit would lie in the shell
    (bound, bound + M], M the largest generator coordinate.  Enumerating the
    enlarged box and finding the shell empty therefore certifies the answer.
    """
    box = _as_box(box)
    d = len(S.basis)
    reach = max(max(g) for g in oracle_lambdas(S))
    outer = math.ceil(box.bound + reach)
    found = _apery_in(enumerate_semigroup(S, outer), d)
    escaped = [p for p in found if max(p) > box.bound]
    if escaped:
        raise BoxTooSmall(f"Apery element {min(escaped)} lies outside the box {box.bound}")
    return found


def naive_member(S, x, box) -> bool:
    """Is ambient x in B, by lookup in the enumerated box."""
    E = sympy.Matrix([list(S.generators[i]) for i in S.basis]).T
    try:
        sol, params = E.gauss_jordan_solve(sympy.Matrix(list(x)))
    except ValueError:
        return False
    lam = tuple(Fraction(int(v.p), int(v.q)) for v in sol)
    return lam in enumerate_semigroup(S, box)
