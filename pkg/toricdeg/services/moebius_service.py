# toricdeg/services/moebius_service.py
from __future__ import annotations

import itertools
from math import comb
from typing import Optional, Sequence

from loguru import logger

from toricdeg.core.config import settings
from toricdeg.core.exceptions import (
    HypothesisViolated,
    MissingDegenerationData,
    MissingUniqueBetti,
    SubsetLimitExceeded,
)
from toricdeg.models.lattice import IntVector, as_vector, vadd, vscale, vsub
from toricdeg.models.moebius import MoebiusContext, SubsetWitness
from toricdeg.models.semigroup import SemigroupPresentation
from toricdeg.schemas.moebius import MoebiusReport, SubsetWitnessOut
from toricdeg.services import toric_service
from toricdeg.services.semigroup_service import SemigroupService


class MoebiusService:
    """μ_S by the interval recursion over the divisibility order of S."""

    def __init__(self, S: SemigroupPresentation):
        self.semigroup = SemigroupService(S)
        self.S = S

    def mobius_table(self, bound: int) -> dict[IntVector, int]:
        """μ on every element of height ≤ bound."""
        elements = self.semigroup.elements_up_to(bound)
        present = set(elements)
        mu: dict[IntVector, int] = {}
        for s in elements:
            if not any(s):
                mu[s] = 1
                continue
            mu[s] = -sum(v for t, v in mu.items() if vsub(s, t) in present)
        logger.debug("Möbius table: {} elements up to height {}", len(mu), bound)
        return mu

    def _interval(self, z: IntVector) -> tuple[list[IntVector], set[IntVector]]:
        elements = self.semigroup.elements_up_to(self.S.height(z))
        present = set(elements)
        return [t for t in elements if vsub(z, t) in present], present

    def mu_bruteforce(self, z: Sequence[int]) -> int:
        z = as_vector(z)
        if not self.semigroup.contains(z):
            return 0
        interval, present = self._interval(z)
        mu: dict[IntVector, int] = {}
        for s in interval:
            if not any(s):
                mu[s] = 1
                continue
            mu[s] = -sum(v for t, v in mu.items() if vsub(s, t) in present)
        return mu[z]

    def chain_count_mu(self, z: Sequence[int]) -> int:
        """Σ_l (−1)^l · #{chains 0 < s_1 < … < s_l = z}, counted directly."""
        z = as_vector(z)
        if not self.semigroup.contains(z):
            return 0
        interval, present = self._interval(z)
        zero = (0,) * self.S.d
        counts = {s: 1 if s == zero else 0 for s in interval}
        total = counts[z]
        for length in range(1, len(interval)):
            counts = {
                s: sum(
                    c
                    for t, c in counts.items()
                    if c and t != s and vsub(s, t) in present
                )
                for s in interval
            }
            if not any(counts.values()):
                break
            total += (-1) ** length * counts[z]
        return total


# ---------- closed formulas ----------


def build_moebius_context(
    S: SemigroupPresentation, w: Optional[Sequence[int]] = None
) -> MoebiusContext:
    """Check the closed-formula hypotheses and gather b (and d_w for a weight)."""
    if not S.pointed:
        raise HypothesisViolated("the closed formula needs a pointed semigroup")
    if not S.full_lattice:
        raise HypothesisViolated("the closed formula needs ZS = Z^d")
    betti = SemigroupService(S).betti_elements().betti
    if len(betti) != 1:
        raise MissingUniqueBetti(f"S has {len(betti)} Betti elements, not one")
    b = tuple(int(x) for x in betti[0])
    if w is None:
        return MoebiusContext(presentation=S, unique_betti=b)

    ctx = toric_service.build_context(S, w)
    lifted = ctx.degenerated
    if not lifted.full_lattice:
        raise HypothesisViolated("Z S_w is not all of Z^(d+1)")
    betti_w = SemigroupService(lifted).betti_elements().betti
    if len(betti_w) != 1:
        raise MissingDegenerationData(f"S_w has {len(betti_w)} Betti elements, not one")
    top = tuple(int(x) for x in betti_w[0])
    if top[:-1] != b:
        raise HypothesisViolated(f"the Betti element {top} of S_w does not lie over {b}")
    return MoebiusContext(
        presentation=S,
        unique_betti=b,
        weight=ctx.weight,
        d_w=top[-1],
        degenerated=lifted,
    )


def _solve_k(rest: IntVector, b: IntVector) -> Optional[int]:
    j = next(i for i, x in enumerate(b) if x)
    if rest[j] % b[j]:
        return None
    k = rest[j] // b[j]
    if k < 0 or vscale(k, b) != rest:
        return None
    return k


def _subsets(columns: Sequence[IntVector], target: IntVector, b: IntVector, max_n: Optional[int]):
    limit = max_n or settings.max_subset_n
    if len(columns) > limit:
        raise SubsetLimitExceeded(
            f"{len(columns)} generators exceed the subset limit of {limit}"
        )
    zero = (0,) * len(target)
    for size in range(len(columns) + 1):
        for subset in itertools.combinations(range(len(columns)), size):
            total = zero
            for i in subset:
                total = vadd(total, columns[i])
            k = _solve_k(vsub(target, total), b)
            if k is not None:
                yield subset, k


def a_z(ctx: MoebiusContext, z: Sequence[int], max_n: Optional[int] = None) -> list[SubsetWitness]:
    if ctx.unique_betti is None:
        raise MissingUniqueBetti("no unique Betti element recorded")
    S = ctx.presentation
    out = []
    for subset, k in _subsets(S.columns, as_vector(z), ctx.unique_betti, max_n):
        level = None
        if ctx.has_degeneration:
            level = sum(ctx.weight[i] for i in subset) + k * ctx.d_w
        out.append(SubsetWitness(subset=subset, k=k, level=level))
    return out


def b_z(
    ctx: MoebiusContext, z: Sequence[int], lam: int, max_n: Optional[int] = None
) -> list[SubsetWitness]:
    """Subsets of the n+1 generators of S_w hitting (z, λ) up to multiples of (b, d_w)."""
    if not ctx.has_degeneration or ctx.degenerated is None:
        raise MissingDegenerationData("b_z needs a weight with a unique Betti element of S_w")
    top = ctx.unique_betti + (ctx.d_w,)
    target = as_vector(z) + (lam,)
    return [
        SubsetWitness(subset=subset, k=k)
        for subset, k in _subsets(ctx.degenerated.columns, target, top, max_n)
    ]


def _term(ctx: MoebiusContext, w: SubsetWitness) -> int:
    S = ctx.presentation
    return (-1) ** len(w.subset) * comb(w.k + S.n - S.d - 1, w.k)


def mu_closed(ctx: MoebiusContext, z: Sequence[int], max_n: Optional[int] = None) -> int:
    return sum(_term(ctx, w) for w in a_z(ctx, z, max_n))


def mu_degeneration(
    ctx: MoebiusContext, z: Sequence[int], lam: int, max_n: Optional[int] = None
) -> int:
    """μ_{S_w}(z, λ), with the binomials taken in the n and d of S."""
    if not ctx.has_degeneration:
        raise MissingDegenerationData("mu_degeneration needs d_w")
    total = 0
    for w in a_z(ctx, z, max_n):
        if lam == w.level:
            total += _term(ctx, w)
        elif lam == w.level + 1:
            total -= _term(ctx, w)
    return total


def _witnesses_out(witnesses: Sequence[SubsetWitness]) -> list[SubsetWitnessOut]:
    return [SubsetWitnessOut(subset=list(w.subset), k=w.k, level=w.level) for w in witnesses]


def moebius_report(
    S: SemigroupPresentation,
    z: Sequence[int],
    lam: Optional[int] = None,
    w: Optional[Sequence[int]] = None,
    max_n: Optional[int] = None,
) -> MoebiusReport:
    """
    Brute force always; the closed formula when its hypotheses hold. With λ,
    the values are μ_{S_w}(z, λ) and `w` is required.
    """
    z = as_vector(z)
    if lam is not None and w is None:
        raise MissingDegenerationData("λ given without a weight")
    if lam is None:
        brute = MoebiusService(S).mu_bruteforce(z)
    else:
        lifted = toric_service.build_context(S, w).degenerated
        brute = MoebiusService(lifted).mu_bruteforce(z + (lam,))

    try:
        ctx = build_moebius_context(S, w if lam is not None else None)
    except HypothesisViolated as exc:
        logger.warning("Closed formula unavailable: {}", exc.detail)
        return MoebiusReport(z=list(z), lam=lam, brute_force=brute, downgraded=exc.detail)

    witnesses = a_z(ctx, z, max_n)
    closed = mu_closed(ctx, z, max_n) if lam is None else mu_degeneration(ctx, z, lam, max_n)
    return MoebiusReport(
        z=list(z),
        lam=lam,
        unique_betti=list(ctx.unique_betti),
        d_w=ctx.d_w,
        brute_force=brute,
        closed=closed,
        witnesses=_witnesses_out(witnesses),
        agreement=closed == brute,
    )
