"""Named example semigroups and a seeded generator of random simplicial ones."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .semigroup import AffineSemigroup, build_semigroup

WORKED_EXAMPLE = [(2, 0), (0, 1), (3, 1), (1, 2)]
WORKED_CLOSURE = [(2, 0), (0, 1), (1, 1)]


def named() -> dict:
    """Small fixed instances used throughout the tests."""
    return {
        "worked": build_semigroup(WORKED_EXAMPLE),
        "N2": build_semigroup([(1, 0), (0, 1)]),
        "N3": build_semigroup([(1, 0, 0), (0, 1, 0), (0, 0, 1)]),
        "<2,3>": build_semigroup([(2,), (3,)]),
        "<3,4,5>": build_semigroup([(3,), (4,), (5,)]),
    }


@dataclass(frozen=True)
class RandomConfig:
    """Parameters for ``random_semigroup``.

    The basis is a lower-triangular integer matrix with determinant at most
    ``max_delta``; extra generators are integer points whose
    lambda-coordinates are ``a / det`` with numerators ``a`` in
    ``[0, max_numerator]``.  ``lift`` appends a coordinate sum so
    the semigroup lives in Z^(d+1).
    """

    d: int = 2
    max_numerator: int = 6
    max_delta: int = 4
    min_extra: int = 2
    max_extra: int = 4
    lift: bool = False


def _basis(rng: random.Random, cfg: RandomConfig) -> list:
    while True:
        diag = [rng.randint(1, cfg.max_delta) for _ in range(cfg.d)]
        if 1 < math.prod(diag) <= cfg.max_delta:
            break
    rows = []
    for i in range(cfg.d):
        rows.append(tuple(
            diag[i] if j == i else (rng.randint(0, diag[j] - 1) if j < i else 0)
            for j in range(cfg.d)
        ))
    return rows


def random_semigroup(rng: random.Random, cfg: RandomConfig = RandomConfig()) -> AffineSemigroup:
    basis = _basis(rng, cfg)
    det = math.prod(basis[i][i] for i in range(cfg.d))
    extras = []
    want = rng.randint(cfg.min_extra, cfg.max_extra)
    for _ in range(200):
        if len(extras) == want:
            break
        lam = [Fraction(rng.randint(0, cfg.max_numerator), det) for _ in range(cfg.d)]
        x = [sum(lam[i] * basis[i][r] for i in range(cfg.d)) for r in range(cfg.d)]
        if any(v.denominator != 1 for v in x) or not any(x):
            continue
        x = tuple(int(v) for v in x)
        if x not in basis and x not in extras:
            extras.append(x)
    gens = basis + extras
    if cfg.lift:
        gens = [g + (sum(g),) for g in gens]
    return build_semigroup(gens, basis_hint=range(cfg.d))


def random_family(count: int, seed: int, dims=(2, 3), **kwargs) -> list:
    """``count`` random semigroups alternating over ``dims``."""
    rng = random.Random(seed)
    return [
        random_semigroup(rng, RandomConfig(d=dims[i % len(dims)], **kwargs))
        for i in range(count)
    ]
