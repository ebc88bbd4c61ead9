"""The Cohen-Macaulayfication B~ = <e_1..e_d, h_1..h_f> and the saturation of B."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .decomposition import decompose, is_cohen_macaulay
from .errors import InternalInconsistency, NotInSpan, PointOutsideSaturation
from .lattice import fundamental_domain_points, solve_lambda
from .semigroup import AffineSemigroup, build_semigroup, cone_member, group_member, member


@dataclass(frozen=True)
class ClosureResult:
    closure: AffineSemigroup
    shifts_used: tuple  # ambient h_j, class order


@dataclass(frozen=True)
class SaturationResult:
    saturation: AffineSemigroup


@dataclass(frozen=True)
class MinimalityVerdict:
    cm: bool
    # only decided when the probed semigroup is CM
    contains_closure: Optional[bool] = None


@dataclass(frozen=True)
class ProbeSummary:
    samples: int
    cm_found: int
    violations: tuple  # extra-point sets whose CM extension missed B~

    @property
    def ok(self) -> bool:
        return not self.violations


def _over_basis(S: AffineSemigroup, extra: Sequence) -> AffineSemigroup:
    gens = list(S.basis_vectors)
    gens += [tuple(x) for x in extra if any(x)]
    return build_semigroup(gens, basis_hint=range(S.rank))


def cm_closure(S: AffineSemigroup) -> ClosureResult:
    dec = decompose(S)
    closure = _over_basis(S, dec.shifts_ambient)
    if not is_cohen_macaulay(closure).is_cm:
        raise InternalInconsistency("closure semigroup is not Cohen-Macaulay")
    return ClosureResult(closure, dec.shifts_ambient)


def saturate(S: AffineSemigroup) -> SaturationResult:
    """B_sat = C(B) cap G(B), generated by the e_i and the points of G(B) in [0,1)^d."""
    cell = [S.ambient(w) for w in fundamental_domain_points(S.group)]
    return SaturationResult(_over_basis(S, cell))


def is_subsemigroup(S1: AffineSemigroup, S2: AffineSemigroup) -> bool:
    if S1.ambient_dim != S2.ambient_dim:
        raise ValueError("ambient dimensions differ")
    return all(member(S2, g) for g in S1.generators)


def same_semigroup(S1: AffineSemigroup, S2: AffineSemigroup) -> bool:
    return is_subsemigroup(S1, S2) and is_subsemigroup(S2, S1)


def ambient_points_in_box(S: AffineSemigroup, bound: int) -> Iterator[tuple]:
    """Yield (x, lambda) for every x in Z^n with lambda^x in [0, bound]^d."""
    basis = S.basis_vectors
    d, n = S.rank, S.ambient_dim
    lo = [sum(min(0, e[r]) for e in basis) for r in range(n)]
    hi = [sum(max(0, e[r]) for e in basis) for r in range(n)]
    cell = []
    for x in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        try:
            lam = solve_lambda(x, basis)
        except NotInSpan:
            continue
        if all(0 <= c < 1 for c in lam):
            cell.append((x, lam))
    for x, lam in sorted(cell, key=lambda p: p[1]):
        for shift in itertools.product(range(bound + 1), repeat=d):
            mu = tuple(a + b for a, b in zip(lam, shift))
            if max(mu) > bound:
                continue
            y = tuple(x[r] + sum(s * e[r] for s, e in zip(shift, basis)) for r in range(n))
            yield y, mu


def saturation_failures(S: AffineSemigroup, sat: SaturationResult, bound: int) -> Iterator[tuple]:
    for x, _ in ambient_points_in_box(S, bound):
        if bool(member(sat.saturation, x)) != (group_member(S, x) and cone_member(S, x)):
            yield x


def verify_saturation(S: AffineSemigroup, sat: SaturationResult, bound: int) -> bool:
    return next(saturation_failures(S, sat, bound), None) is None


def in_saturation(S: AffineSemigroup, x) -> bool:
    return group_member(S, x) and cone_member(S, x)


def check_minimality(
    S: AffineSemigroup, extra_points, closure: Optional[ClosureResult] = None
) -> MinimalityVerdict:
    """Extend B by ``extra_points``; if the result is CM it must contain B~."""
    for x in extra_points:
        if len(x) != S.ambient_dim or not in_saturation(S, x):
            raise PointOutsideSaturation(f"{tuple(x)} is not in C(B) cap G(B)")
    hat = _over_basis(S, list(S.generators) + [tuple(x) for x in extra_points])
    if not is_cohen_macaulay(hat).is_cm:
        return MinimalityVerdict(cm=False)
    closure = closure or cm_closure(S)
    return MinimalityVerdict(cm=True, contains_closure=is_subsemigroup(closure.closure, hat))


def probe_minimality(
    S: AffineSemigroup,
    samples: int = 100,
    seed: int = 0,
    bound: int = 2,
    max_points: int = 3,
) -> ProbeSummary:
    """Random extensions of B inside B_sat, drawn from the lambda-box [0, bound]^d."""
    rng = random.Random(seed)
    pool = [x for x, _ in ambient_points_in_box(S, bound) if any(x) and in_saturation(S, x)]
    closure = cm_closure(S)
    cm_found = 0
    violations = []
    for _ in range(samples):
        k = rng.randint(0, min(max_points, len(pool)))
        extra = rng.sample(pool, k)
        verdict = check_minimality(S, extra, closure)
        if verdict.cm:
            cm_found += 1
            if not verdict.contains_closure:
                violations.append(tuple(extra))
    return ProbeSummary(samples, cm_found, tuple(violations))


def strictly_contained(S1: AffineSemigroup, S2: AffineSemigroup) -> bool:
    return is_subsemigroup(S1, S2) and not is_subsemigroup(S2, S1)

