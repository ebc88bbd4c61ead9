"""Exact lattice arithmetic in lambda-coordinates.

A point of the rational span of a basis e_1..e_d is stored by its
coordinates lambda in that basis, as a tuple of ``Fraction``.  Full-rank
lattices in Q^d are stored as ``(1/denominator) * rowspan(basis)`` with
``basis`` an integer lower-triangular matrix in Hermite normal form.
Nothing in here touches floating point.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DependentBasis,
    NotInSpan,
    NotSublattice,
    NotSuperlattice,
    RankDeficient,
)

RationalVector = tuple  # tuple[Fraction, ...]


def rvec(values: Iterable) -> RationalVector:
    return tuple(Fraction(v) for v in values)


def frac_part(v: RationalVector) -> RationalVector:
    return tuple(x - math.floor(x) for x in v)


def common_denominator(v: Iterable[Fraction]) -> int:
    return math.lcm(1, *(Fraction(x).denominator for x in v))


@dataclass(frozen=True)
class IntegerLattice:
    dim: int
    denominator: int
    basis: tuple  # tuple[tuple[int, ...], ...], lower triangular

    def __post_init__(self):
        if len(self.basis) != self.dim or any(len(r) != self.dim for r in self.basis):
            raise ValueError("basis must be a dim x dim matrix")
        if self.denominator < 1:
            raise ValueError("denominator must be positive")

    @property
    def diagonal(self) -> tuple:
        return tuple(self.basis[i][i] for i in range(self.dim))

    def covolume(self) -> Fraction:
        """Volume of a fundamental cell, ``det(basis) / denominator**dim``."""
        return Fraction(math.prod(self.diagonal), self.denominator**self.dim)

    def generators(self) -> list:
        """The basis rows as rational vectors (already divided by the denominator)."""
        return [tuple(Fraction(x, self.denominator) for x in row) for row in self.basis]


def integer_lattice(dim: int) -> IntegerLattice:
    """Z^d itself, i.e. G(A) in lambda-coordinates."""
    return IntegerLattice(
        dim, 1, tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim))
    )


def _row_echelon(rows: list) -> tuple[list, list]:
    """Reduced row echelon form over Q. Returns (rows, pivot columns)."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(vectors: Sequence[Sequence]) -> int:
    if not vectors:
        return 0
    _, pivots = _row_echelon([[Fraction(x) for x in v] for v in vectors])
    return len(pivots)


def solve_lambda(point: Sequence[int], basis: Sequence[Sequence[int]]) -> RationalVector:
    """Coordinates of ``point`` in the (ambient) vectors ``basis``.

    Raises DependentBasis if the basis vectors are not linearly independent and
    NotInSpan if ``point`` lies outside their rational span.
    """
    d = len(basis)
    n = len(point)
    if d == 0 or any(len(b) != n for b in basis):
        raise DependentBasis("basis vectors must be nonempty and of the point's length")
    # augmented n x (d+1) system  sum_i lambda_i * basis[i] = point
    aug = [[Fraction(basis[i][r]) for i in range(d)] + [Fraction(point[r])] for r in range(n)]
    red, pivots = _row_echelon(aug)
    if [p for p in pivots if p < d] != list(range(d)):
        raise DependentBasis("basis vectors are linearly dependent")
    if d in pivots:
        raise NotInSpan(f"{tuple(point)} is not in the span of the basis")
    return tuple(red[i][d] for i in range(d))


def from_lambda(lam: RationalVector, basis: Sequence[Sequence[int]]) -> tuple:
    """Ambient vector sum_i lam_i * basis[i]; integral entries are returned as int."""
    n = len(basis[0])
    out = []
    for r in range(n):
        s = sum((Fraction(lam[i]) * basis[i][r] for i in range(len(basis))), Fraction(0))
        out.append(int(s) if s.denominator == 1 else s)
    return tuple(out)


def hermite_form(rows: Sequence[Sequence[int]], denominator: int = 1) -> IntegerLattice:
    """Hermite normal form of the lattice ``(1/denominator) * rowspan(rows)``.

    The returned basis is lower triangular with positive diagonal and every
    entry below the diagonal reduced into ``[0, diagonal)`` of its column.
    The denominator is shrunk to the smallest possible value.
    """
    work = [list(map(int, r)) for r in rows if any(r)]
    if not rows:
        raise RankDeficient("no rows given")
    d = len(rows[0])
    basis = [None] * d
    for col in range(d - 1, -1, -1):
        # gcd-combine the column among the remaining rows
        while True:
            nz = [r for r in work if r[col] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            for r in nz[1:]:
                q = r[col] // piv[col]
                for j in range(col + 1):
                    r[j] -= q * piv[j]
            work = [r for r in work if any(r)]
        nz = [r for r in work if r[col] != 0]
        if not nz:
            raise RankDeficient(f"rows do not span a rank-{d} lattice")
        piv = nz[0]
        if piv[col] < 0:
            piv = [-x for x in piv]
        basis[col] = piv
        work = [r for r in work if r[col] == 0 and any(r)]
    for i in range(d):
        for j in range(i - 1, -1, -1):
            q = basis[i][j] // basis[j][j]
            if q:
                basis[i] = [a - q * b for a, b in zip(basis[i], basis[j])]
    g = math.gcd(denominator, *(x for row in basis for x in row))
    return IntegerLattice(
        d, denominator // g, tuple(tuple(x // g for x in row) for row in basis)
    )


def lattice_from_vectors(vectors: Iterable[RationalVector]) -> IntegerLattice:
    """Lattice generated by rational vectors (need not be a basis)."""
    vectors = [rvec(v) for v in vectors]
    delta = math.lcm(1, *(common_denominator(v) for v in vectors))
    return hermite_form([[int(x * delta) for x in v] for v in vectors], delta)


def lattice_member(v: RationalVector, L: IntegerLattice) -> bool:
    if len(v) != L.dim:
        return False
    w = [Fraction(x) * L.denominator for x in v]
    if any(x.denominator != 1 for x in w):
        return False
    w = [int(x) for x in w]
    for i in range(L.dim - 1, -1, -1):
        c, r = divmod(w[i], L.basis[i][i])
        if r:
            return False
        if c:
            w = [a - c * b for a, b in zip(w, L.basis[i])]
    return True


def lattice_index(sub: IntegerLattice, sup: IntegerLattice) -> int:
    """Index [sup : sub] of a sublattice."""
    if sub.dim != sup.dim:
        raise NotSublattice("dimension mismatch")
    for g in sub.generators():
        if not lattice_member(g, sup):
            raise NotSublattice(f"{g} is not in the super lattice")
    idx = sub.covolume() / sup.covolume()
    assert idx.denominator == 1
    return int(idx)


def fundamental_domain_points(L: IntegerLattice) -> list:
    """All points of L in the half-open unit box [0, 1)^d, lex-sorted.

    Requires Z^d inside L; then there are exactly [L : Z^d] such points.
    """
    d, delta = L.dim, L.denominator
    for i in range(d):
        unit = tuple(Fraction(int(i == j)) for j in range(d))
        if not lattice_member(unit, L):
            raise NotSuperlattice("lattice does not contain Z^d")
    # Mixed-radix walk from the last column down: at column j the already
    # fixed rows i > j contribute `partial[j]`, and c_j ranges over the
    # delta / diag_j values keeping the scaled coordinate in [0, delta).
    points = []

    def walk(col: int, partial: list):
        if col < 0:
            points.append(tuple(Fraction(x, delta) for x in partial))
            return
        diag = L.basis[col][col]
        lo = -(partial[col] // diag)  # smallest c with partial + c*diag >= 0
        for c in range(lo, lo + delta // diag):
            walk(col - 1, [a + c * b for a, b in zip(partial, L.basis[col])])

    walk(d - 1, [0] * d)
    points.sort()
    return points


def box_points(bound: int, d: int) -> Iterable[tuple]:
    """Integer vectors in [0, bound]^d."""
    return itertools.product(range(bound + 1), repeat=d)
