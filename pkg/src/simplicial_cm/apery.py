"""Apery set B_A with respect to A = <e_1..e_d>, its classes, shifts and ideals."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InternalInconsistency
from .lattice import RationalVector, frac_part, integer_lattice, lattice_index
from .semigroup import AffineSemigroup, member_lambda


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal of T = K[t^e_1..t^e_d] by its minimal exponent vectors."""

    dim: int
    min_gens: tuple

    @classmethod
    def from_exponents(cls, dim: int, exponents) -> "MonomialIdeal":
        exps = sorted(set(tuple(int(x) for x in e) for e in exponents))
        minimal = [
            e for e in exps
            if not any(f != e and all(a <= b for a, b in zip(f, e)) for f in exps)
        ]
        return cls(dim, tuple(minimal))

    @property
    def is_unit(self) -> bool:
        return self.min_gens == ((0,) * self.dim,)

    def contains(self, exponent: Sequence[int]) -> bool:
        """Is t^exponent in the ideal, i.e. is exponent in the staircase?"""
        return any(all(a <= b for a, b in zip(g, exponent)) for g in self.min_gens)


@dataclass(frozen=True)
class AperyClass:
    elements: tuple  # lambda-vectors, lex sorted
    shift: RationalVector
    ideal: MonomialIdeal

    @property
    def residue(self) -> RationalVector:
        return frac_part(self.shift)


def _multiplicity_bound(lam: RationalVector) -> int:
    """Smallest m >= 1 with m * lam integral."""
    return math.lcm(1, *(Fraction(x).denominator for x in lam))


def _unit(d: int, i: int) -> tuple:
    return tuple(Fraction(int(i == j)) for j in range(d))


def _drops_to_b(S: AffineSemigroup, lam: RationalVector) -> bool:
    """Is lam - e_i in B for some i?"""
    d = S.rank
    for i in range(d):
        if lam[i] >= 1 and member_lambda(S, tuple(a - b for a, b in zip(lam, _unit(d, i)))):
            return True
    return False


def in_apery(S: AffineSemigroup, lam: RationalVector) -> bool:
    """lam in B and lam - e_i not in B for every i."""
    return bool(member_lambda(S, lam)) and not _drops_to_b(S, lam)


def apery_set(S: AffineSemigroup) -> list:
    """B_A as lambda-vectors, lex sorted.

    If x is not in B_A then neither is x + y for y in B, so every element of
    B_A is reached from 0 by adding non-basis generators one at a time
    without leaving B_A.  A walk along such steps finds all of it; it stays
    finite because generator k is never used m_k times (m_k * b_k lies in A).
    """
    d = S.rank
    others = [S.lambda_gens[k] for k in range(len(S.generators)) if k not in set(S.basis)]
    zero = (Fraction(0),) * d
    found = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for y in frontier:
            for b in others:
                x = tuple(p + q for p, q in zip(y, b))
                if x not in found and not _drops_to_b(S, x):
                    found.add(x)
                    nxt.append(x)
        frontier = nxt
    return sorted(found)


def apery_candidates(S: AffineSemigroup) -> set:
    """All sums with generator k used fewer than m_k times: a finite superset of B_A."""
    d = S.rank
    others = [k for k in range(len(S.generators)) if k not in set(S.basis)]
    ranges = [range(_multiplicity_bound(S.lambda_gens[k])) for k in others]
    out = set()
    for mult in itertools.product(*ranges):
        lam = [Fraction(0)] * d
        for m, k in zip(mult, others):
            if m:
                lam = [a + m * b for a, b in zip(lam, S.lambda_gens[k])]
        out.add(tuple(lam))
    return out


def class_count(S: AffineSemigroup) -> int:
    return lattice_index(integer_lattice(S.rank), S.group)


def make_class(elements) -> AperyClass:
    elements = tuple(sorted(elements))
    d = len(elements[0])
    shift = tuple(min(e[i] for e in elements) for i in range(d))
    offsets = []
    for e in elements:
        off = tuple(a - b for a, b in zip(e, shift))
        if any(x.denominator != 1 or x < 0 for x in off):
            raise InternalInconsistency(f"class element {e} is not shift {shift} plus A")
        offsets.append(off)
    return AperyClass(elements, shift, MonomialIdeal.from_exponents(d, offsets))


def partition_classes(S: AffineSemigroup, apery: Sequence[RationalVector]) -> list:
    """Group B_A by fractional parts; class of 0 first, then lex by residue."""
    groups: dict = {}
    for lam in apery:
        groups.setdefault(frac_part(lam), []).append(lam)
    f = class_count(S)
    if len(groups) != f:
        raise InternalInconsistency(
            f"{len(groups)} residue classes in B_A but lattice index is {f}"
        )
    # frac parts are >= 0, so the zero residue is already lex-least
    return [make_class(groups[r]) for r in sorted(groups)]


def ideal_height(ideal: MonomialIdeal):
    """Height of a monomial ideal; ``math.inf`` for the unit ideal.

    Smallest set of variables meeting the support of every minimal generator.
    """
    if ideal.is_unit:
        return math.inf
    supports = [frozenset(i for i, x in enumerate(g) if x) for g in ideal.min_gens]
    for size in range(1, ideal.dim + 1):
        for cover in itertools.combinations(range(ideal.dim), size):
            c = set(cover)
            if all(s & c for s in supports):
                return size
    raise InternalInconsistency("no vertex cover found")
