# toricdeg/services/lattice_core.py
"""
Exact integer and rational linear algebra over generator matrices.

Everything here works on Python ints and `fractions.Fraction`; nothing is
ever rounded. The LP solver is a dense two-phase simplex with Bland's rule,
which is plenty for the small configurations this package handles.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

from loguru import logger
from sympy import Matrix
from sympy.matrices.normalforms import invariant_factors
from sympy.polys.domains import ZZ

from toricdeg.core.exceptions import DimensionMismatch, NotPointed
from toricdeg.models.lattice import (
    CertificateKind,
    GeneratorMatrix,
    IntVector,
    RationalCertificate,
    dot,
)

# ---------- integer row reduction ----------


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (x, y, g) with x*a + y*b == g == gcd(a, b) >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def _echelon(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """
    Unimodular row echelon over the first `ncols` columns.
    Returns the transformed rows and the pivot columns (one per leading row).
    """
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for k in range(ncols):
        if r == len(rows):
            break
        for i in range(r, len(rows)):
            if rows[i][k]:
                rows[r], rows[i] = rows[i], rows[r]
                break
        else:
            continue
        for i in range(r + 1, len(rows)):
            b = rows[i][k]
            if not b:
                continue
            a = rows[r][k]
            x, y, g = xgcd(a, b)
            rp, ri = rows[r], rows[i]
            rows[r] = [x * p + y * q for p, q in zip(rp, ri)]
            rows[i] = [(-b // g) * p + (a // g) * q for p, q in zip(rp, ri)]
        pivots.append(k)
        r += 1
    return rows, pivots


def hermite_basis(vectors: Sequence[Sequence[int]]) -> list[IntVector]:
    """
    Row Hermite normal form of the lattice spanned by `vectors`: positive
    pivots, entries above each pivot reduced into [0, pivot).
    """
    if not vectors:
        return []
    width = len(vectors[0])
    rows, pivots = _echelon([list(v) for v in vectors], width)
    rows = rows[: len(pivots)]
    for j, pc in enumerate(pivots):
        if rows[j][pc] < 0:
            rows[j] = [-x for x in rows[j]]
        p = rows[j][pc]
        for i in range(j):
            q = rows[i][pc] // p
            if q:
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[j])]
    return [tuple(r) for r in rows]


def rank(A: GeneratorMatrix) -> int:
    _, pivots = _echelon([list(c) for c in A.columns], A.ambient_dim)
    return len(pivots)


def lattice_kernel(A: GeneratorMatrix) -> list[IntVector]:
    """Canonical basis of {u ∈ Z^n : Σ u_i a_i = 0}."""
    n, d = A.count, A.ambient_dim
    augmented = [
        list(col) + [1 if j == i else 0 for j in range(n)]
        for i, col in enumerate(A.columns)
    ]
    rows, pivots = _echelon(augmented, d)
    kernel = [row[d:] for row in rows[len(pivots):]]
    basis = hermite_basis(kernel)
    logger.debug("Kernel of {} generators has rank {}", n, len(basis))
    return basis


def is_full_lattice(A: GeneratorMatrix) -> bool:
    """Z A = Z^d, i.e. the Smith form has d unit invariant factors."""
    if A.count < A.ambient_dim:
        return False
    factors = invariant_factors(Matrix(A.rows), domain=ZZ)
    nonzero = [f for f in factors if f != 0]
    return len(nonzero) == A.ambient_dim and all(abs(f) == 1 for f in nonzero)


# ---------- exact simplex ----------


class LPStatus(str, enum.Enum):
    optimal = "optimal"
    infeasible = "infeasible"
    unbounded = "unbounded"


@dataclass(frozen=True, slots=True)
class LPResult:
    status: LPStatus
    x: tuple[Fraction, ...] = ()
    value: Optional[Fraction] = None


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], rhs: list[Fraction], basis: list[int]):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    def pivot(self, i: int, j: int) -> None:
        piv = self.rows[i][j]
        self.rows[i] = [x / piv for x in self.rows[i]]
        self.rhs[i] /= piv
        for k, row in enumerate(self.rows):
            if k == i or not row[j]:
                continue
            f = row[j]
            self.rows[k] = [x - f * y for x, y in zip(row, self.rows[i])]
            self.rhs[k] -= f * self.rhs[i]
        self.basis[i] = j

    def run(self, cost: Sequence[Fraction], allowed: range) -> LPStatus:
        """Minimize cost·x over the current basis with Bland's rule."""
        while True:
            in_basis = set(self.basis)
            entering = None
            for j in allowed:
                if j in in_basis:
                    continue
                reduced = cost[j] - sum(
                    cost[b] * row[j] for b, row in zip(self.basis, self.rows)
                )
                if reduced < 0:
                    entering = j
                    break
            if entering is None:
                return LPStatus.optimal
            leaving = None
            best: Optional[tuple[Fraction, int]] = None
            for i, row in enumerate(self.rows):
                if row[entering] > 0:
                    cand = (self.rhs[i] / row[entering], self.basis[i])
                    if best is None or cand < best:
                        best, leaving = cand, i
            if leaving is None:
                return LPStatus.unbounded
            self.pivot(leaving, entering)


def solve_lp(
    A_eq: Sequence[Sequence[int | Fraction]],
    b: Sequence[int | Fraction],
    cost: Optional[Sequence[int | Fraction]] = None,
) -> LPResult:
    """min cost·x subject to A_eq x = b, x >= 0, in exact arithmetic."""
    m = len(A_eq)
    nvars = len(A_eq[0]) if m else len(cost or ())
    c = [Fraction(v) for v in cost] if cost is not None else [Fraction(0)] * nvars
    if m == 0:
        if any(v < 0 for v in c):
            return LPResult(LPStatus.unbounded)
        return LPResult(LPStatus.optimal, (Fraction(0),) * nvars, Fraction(0))

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for i, (row, bi) in enumerate(zip(A_eq, b)):
        sign = -1 if bi < 0 else 1
        art = [Fraction(1) if k == i else Fraction(0) for k in range(m)]
        rows.append([Fraction(sign * v) for v in row] + art)
        rhs.append(Fraction(sign * bi))

    tab = _Tableau(rows, rhs, [nvars + i for i in range(m)])
    phase_one = [Fraction(0)] * nvars + [Fraction(1)] * m
    tab.run(phase_one, range(nvars + m))
    if sum(r for r, bv in zip(tab.rhs, tab.basis) if bv >= nvars) > 0:
        return LPResult(LPStatus.infeasible)

    # drive artificials out of the basis; rows with no original entry are redundant
    i = 0
    while i < len(tab.rows):
        if tab.basis[i] >= nvars:
            j = next((j for j in range(nvars) if tab.rows[i][j] != 0), None)
            if j is None:
                del tab.rows[i], tab.rhs[i], tab.basis[i]
                continue
            tab.pivot(i, j)
        i += 1

    full_cost = c + [Fraction(0)] * m
    status = tab.run(full_cost, range(nvars))
    if status is LPStatus.unbounded:
        return LPResult(LPStatus.unbounded)
    x = [Fraction(0)] * nvars
    for bv, r in zip(tab.basis, tab.rhs):
        x[bv] = r
    return LPResult(LPStatus.optimal, tuple(x), dot(c, x))


# ---------- cone facts ----------


def primitive_integer(vec: Sequence[Fraction]) -> IntVector:
    """Positive rescaling of a rational vector to a primitive integer vector."""
    den = lcm(*(Fraction(v).denominator for v in vec)) if vec else 1
    ints = [int(Fraction(v) * den) for v in vec]
    g = gcd(*ints) if ints else 0
    return tuple(v // g for v in ints) if g else tuple(ints)


def is_pointed(A: GeneratorMatrix) -> tuple[bool, Optional[IntVector]]:
    """
    Decide NA ∩ (−NA) = {0}. When pointed, also return an integer functional
    c with c·a_i > 0 for every nonzero column a_i.
    """
    d = A.ambient_dim
    nonzero = [col for col in A.columns if any(col)]
    if len(nonzero) != A.count:
        logger.warning("Zero columns do not affect pointedness and are skipped")
    if not nonzero:
        return True, (1,) + (0,) * (d - 1)

    # c = p − q, c·a_i − s_i = 1; minimize c·Σa_i for a canonical vertex
    k = len(nonzero)
    A_eq = []
    for i, col in enumerate(nonzero):
        slack = [-1 if j == i else 0 for j in range(k)]
        A_eq.append(list(col) + [-x for x in col] + slack)
    total = [sum(col[r] for col in nonzero) for r in range(d)]
    cost = total + [-x for x in total] + [0] * k
    result = solve_lp(A_eq, [1] * k, cost)
    if result.status is LPStatus.infeasible:
        return False, None
    if result.status is LPStatus.unbounded:  # bounded below by k whenever feasible
        raise AssertionError("pointedness LP cannot be unbounded")
    c = [result.x[r] - result.x[d + r] for r in range(d)]
    functional = primitive_integer(c)
    return True, functional


def cone_member(z: Sequence[int], A: GeneratorMatrix) -> tuple[bool, RationalCertificate]:
    """Exact test of z ∈ R≥0 A."""
    if len(z) != A.ambient_dim:
        raise DimensionMismatch(
            f"point of dimension {len(z)} for ambient dimension {A.ambient_dim}"
        )
    if A.count == 0:
        ok = not any(z)
        kind = CertificateKind.membership if ok else CertificateKind.infeasible
        return ok, RationalCertificate((), kind)
    result = solve_lp(A.rows, list(z))
    if result.status is LPStatus.infeasible:
        return False, RationalCertificate((), CertificateKind.infeasible)
    return True, RationalCertificate(result.x, CertificateKind.membership)


def _in_zonotope(z: Sequence[int], A: GeneratorMatrix) -> bool:
    n = A.count
    A_eq = [list(row) + [0] * n for row in A.rows]
    for i in range(n):
        A_eq.append([1 if j == i else 0 for j in range(n)] + [1 if j == i else 0 for j in range(n)])
    result = solve_lp(A_eq, list(z) + [1] * n)
    return result.status is not LPStatus.infeasible


def zonotope_points(A: GeneratorMatrix) -> list[IntVector]:
    """
    Lattice points of {Σ α_i a_i : 0 ≤ α_i ≤ 1}, sorted by the pointedness
    functional and then lexicographically.
    """
    d = A.ambient_dim
    if A.count == 0:
        return [(0,) * d]
    pointed, functional = is_pointed(A)
    if not pointed:
        raise NotPointed()
    assert functional is not None
    boxes = []
    for k in range(d):
        lo = sum(min(col[k], 0) for col in A.columns)
        hi = sum(max(col[k], 0) for col in A.columns)
        boxes.append(range(lo, hi + 1))
    points = [z for z in itertools.product(*boxes) if _in_zonotope(z, A)]
    points.sort(key=lambda z: (dot(functional, z), z))
    logger.debug("Zonotope of {} generators has {} lattice points", A.count, len(points))
    return points
