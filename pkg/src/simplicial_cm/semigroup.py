"""Simplicial affine semigroups and their membership tests."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DependentBasis, NotInSpan, NotSimplicial, RankZero
from .lattice import (
    IntegerLattice,
    RationalVector,
    common_denominator,
    from_lambda,
    lattice_from_vectors,
    lattice_member,
    rank,
    solve_lambda,
)


@dataclass(frozen=True)
class AffineSemigroup:
    """B = <generators> in Z^n with simplicial basis ``generators[basis[i]]``.

    ``lambda_gens[k]`` holds the coordinates of generator k in the basis and
    ``group`` is G(B) in the same coordinates.
    """

    ambient_dim: int
    generators: tuple
    basis: tuple
    lambda_gens: tuple
    delta: int
    group: IntegerLattice

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def basis_vectors(self) -> tuple:
        return tuple(self.generators[i] for i in self.basis)

    def coords(self, x: Sequence[int]) -> Optional[RationalVector]:
        """lambda-coordinates of an ambient point, or None outside the span."""
        try:
            return solve_lambda(tuple(x), self.basis_vectors)
        except NotInSpan:
            return None

    def ambient(self, lam: RationalVector) -> tuple:
        return from_lambda(lam, self.basis_vectors)


@dataclass(frozen=True)
class MembershipCertificate:
    """Nonnegative coefficients over ``S.generators`` summing to the target, or None."""

    coefficients: Optional[tuple]

    @property
    def present(self) -> bool:
        return self.coefficients is not None

    def __bool__(self) -> bool:
        return self.present


def _dedup(generators) -> list:
    out = []
    seen = set()
    for g in generators:
        g = tuple(int(x) for x in g)
        if g not in seen:
            seen.add(g)
            out.append(g)
    return out


def _primitive(v: tuple) -> tuple[tuple, int]:
    g = math.gcd(*v)
    return tuple(x // g for x in v), g


def _find_simplicial_basis(gens: list, d: int) -> tuple:
    # one representative per ray direction: the smallest multiple on the ray
    rays: dict = {}
    for k, g in enumerate(gens):
        direction, mult = _primitive(g)
        if direction not in rays or mult < rays[direction][1]:
            rays[direction] = (k, mult)
    reps = sorted(k for k, _ in rays.values())
    if len(reps) == d:
        candidates = [tuple(reps)]
    else:
        candidates = itertools.combinations(reps, d)
    for combo in candidates:
        vecs = [gens[k] for k in combo]
        if rank(vecs) < d:
            continue
        if all(min(solve_lambda(g, vecs)) >= 0 for g in gens):
            return combo
    raise NotSimplicial(
        f"no {d} generators span a simplicial cone containing all {len(gens)} generators"
    )


def build_semigroup(generators, basis_hint: Optional[Sequence[int]] = None) -> AffineSemigroup:
    """Validate a generating set and attach its simplicial basis.

    ``basis_hint`` (indices into the deduplicated generator list) overrides
    auto-detection. Zero vectors are rejected.
    """
    gens = _dedup(generators)
    if not gens:
        raise RankZero("no generators")
    n = len(gens[0])
    if any(len(g) != n for g in gens):
        raise ValueError("generators have different lengths")
    if any(not any(g) for g in gens):
        raise ValueError("zero generator")
    d = rank(gens)
    if basis_hint is not None:
        basis = tuple(basis_hint)
        if len(basis) != d or len(set(basis)) != d:
            raise NotSimplicial(f"basis must consist of {d} distinct generators")
        if not all(0 <= i < len(gens) for i in basis):
            raise IndexError("basis index out of range")
    else:
        basis = _find_simplicial_basis(gens, d)
    vecs = [gens[i] for i in basis]
    try:
        lams = tuple(solve_lambda(g, vecs) for g in gens)
    except (DependentBasis, NotInSpan) as exc:
        raise NotSimplicial(f"basis {basis} does not span the generators") from exc
    for g, lam in zip(gens, lams):
        if min(lam) < 0:
            raise NotSimplicial(f"generator {g} lies outside the cone of the basis")
    delta = math.lcm(1, *(common_denominator(lam) for lam in lams))
    return AffineSemigroup(
        ambient_dim=n,
        generators=tuple(gens),
        basis=basis,
        lambda_gens=lams,
        delta=delta,
        group=lattice_from_vectors(lams),
    )


def member_lambda(S: AffineSemigroup, lam: RationalVector) -> MembershipCertificate:
    """Membership of the point with lambda-coordinates ``lam``.

    Depth-first search over multiplicities of the non-basis generators;
    whatever residual is left must be a nonnegative integer vector, which the
    basis elements then cover exactly.
    """
    absent = MembershipCertificate(None)
    lam = tuple(Fraction(x) for x in lam)
    if len(lam) != S.rank or min(lam, default=0) < 0 or not lattice_member(lam, S.group):
        return absent
    basis_set = set(S.basis)
    order = sorted(
        (k for k in range(len(S.generators)) if k not in basis_set),
        key=lambda k: (-sum(S.lambda_gens[k]), k),
    )
    # failed (position, residual) pairs, local to this call
    dead: set = set()
    chosen = [0] * len(S.generators)

    def search(pos: int, res: tuple) -> bool:
        if pos == len(order):
            return all(x.denominator == 1 for x in res)
        if (pos, res) in dead:
            return False
        k = order[pos]
        b = S.lambda_gens[k]
        top = min(math.floor(r / c) for r, c in zip(res, b) if c > 0)
        for m in range(top, -1, -1):
            nxt = tuple(r - m * c for r, c in zip(res, b))
            if search(pos + 1, nxt):
                chosen[k] = m
                return True
        dead.add((pos, res))
        return False

    if not search(0, lam):
        return absent
    res = list(lam)
    for k in order:
        res = [r - chosen[k] * c for r, c in zip(res, S.lambda_gens[k])]
    for i, k in enumerate(S.basis):
        chosen[k] = int(res[i])
    return MembershipCertificate(tuple(chosen))


def member(S: AffineSemigroup, x: Sequence[int]) -> MembershipCertificate:
    lam = S.coords(x)
    if lam is None:
        return MembershipCertificate(None)
    return member_lambda(S, lam)


def group_member(S: AffineSemigroup, x: Sequence[int]) -> bool:
    lam = S.coords(x)
    return lam is not None and lattice_member(lam, S.group)


def cone_member(S: AffineSemigroup, x: Sequence[int]) -> bool:
    lam = S.coords(x)
    return lam is not None and min(lam) >= 0
