# toricdeg/services/semigroup_service.py
from __future__ import annotations

import heapq
import itertools
import random
from typing import Iterable, Optional, Sequence

from loguru import logger

from toricdeg.core.config import settings
from toricdeg.core.exceptions import (
    CertificationFailure,
    DimensionMismatch,
    HypothesisViolated,
    InvalidParams,
    LimitExceeded,
    NotPointed,
    TheoryViolation,
)
from toricdeg.models.binomial import Binomial, Tiebreak, divides
from toricdeg.models.corpus import IntervalCase, IntervalClassification
from toricdeg.models.lattice import (
    GeneratorMatrix,
    IntVector,
    as_vector,
    dot,
    vadd,
    vscale,
    vsub,
)
from toricdeg.models.semigroup import DegenerationContext, Fiber, SemigroupPresentation
from toricdeg.schemas.common import binomials_out
from toricdeg.schemas.invariants import (
    ApproximationCertificate,
    BettiReport,
    DegreeCount,
    InclusionEntry,
    InclusionReport,
    MonDegCertificate,
    PointCase,
    SaturationReport,
    UniquePresentationReport,
)
from toricdeg.services import binomial_algebra, lattice_core, toric_service


class SemigroupService:
    """
    Membership, fibers and the invariants built on them for one pointed
    semigroup S = NA.

    Searches are bounded by the pointedness functional: every generator has
    positive height, so the height of z caps each coefficient.
    """

    def __init__(self, S: SemigroupPresentation):
        if not S.pointed:
            raise NotPointed()
        self.S = S
        self.heights = tuple(S.height(col) for col in S.columns)
        self._cache: dict[tuple[int, IntVector], Optional[IntVector]] = {}

    def _check(self, z: Sequence[int]) -> IntVector:
        z = as_vector(z)
        if len(z) != self.S.d:
            raise DimensionMismatch(f"point of dimension {len(z)} in Z^{self.S.d}")
        return z

    # ---------- membership ----------

    def _rep(self, i: int, z: IntVector) -> Optional[IntVector]:
        n = self.S.n
        if not any(z):
            return (0,) * (n - i)
        if i == n:
            return None
        h = self.S.height(z)
        if h <= 0:
            return None
        key = (i, z)
        if key in self._cache:
            return self._cache[key]

        col, step = self.S.columns[i], self.heights[i]
        found = None
        for k in range(h // step, -1, -1):
            rest = self._rep(i + 1, vsub(z, vscale(k, col)))
            if rest is not None:
                found = (k,) + rest
                break

        if len(self._cache) >= settings.membership_cache_size:
            self._cache.clear()
        self._cache[key] = found
        return found

    def member(self, z: Sequence[int]) -> Optional[IntVector]:
        """u ≥ 0 with Au = z, or None when z ∉ S."""
        return self._rep(0, self._check(z))

    def contains(self, z: Sequence[int]) -> bool:
        return self.member(z) is not None

    def fiber(self, b: Sequence[int]) -> Fiber:
        b = self._check(b)
        n = self.S.n
        memo: dict[tuple[int, IntVector], list[IntVector]] = {}

        def expand(i: int, z: IntVector) -> list[IntVector]:
            if i == n:
                return [()] if not any(z) else []
            if (i, z) in memo:
                return memo[(i, z)]
            h = self.S.height(z)
            out: list[IntVector] = []
            if h >= 0:
                col = self.S.columns[i]
                for k in range(h // self.heights[i], -1, -1):
                    out.extend((k,) + r for r in expand(i + 1, vsub(z, vscale(k, col))))
            memo[(i, z)] = out
            return out

        return Fiber(degree=b, points=tuple(expand(0, b)))

    def elements_up_to(self, bound: int) -> list[IntVector]:
        """Elements of S of height ≤ bound, ordered by (height, lex)."""
        zero = (0,) * self.S.d
        seen = {zero}
        frontier = [zero]
        while frontier:
            nxt = []
            for z in frontier:
                for col in self.S.columns:
                    s = vadd(z, col)
                    if s not in seen and self.S.height(s) <= bound:
                        seen.add(s)
                        nxt.append(s)
            frontier = nxt
        return sorted(seen, key=lambda z: (self.S.height(z), z))

    def multiple_in_semigroup(self, z: Sequence[int], max_k: int) -> Optional[int]:
        """Smallest k in 1..max_k with k·z ∈ S."""
        z = self._check(z)
        for k in range(1, max_k + 1):
            if self.contains(vscale(k, z)):
                return k
        return None

    # ---------- Betti elements ----------

    def betti_elements(self) -> BettiReport:
        mins = binomial_algebra.minimal_generators(
            toric_service.toric_ideal(self.S), self.S.matrix
        )
        betti = [m.degree for m in mins]
        minimal = [
            b
            for b in betti
            if not any(c != b and self.contains(vsub(b, c)) for c in betti)
        ]
        unique = set(betti) == set(minimal) and all(m.count == 1 for m in mins)
        gens = [g for m in mins for g in m.generators]
        logger.info(
            "Betti elements: {} degrees, uniquely presented: {}", len(betti), unique
        )
        return BettiReport(
            betti=[list(b) for b in betti],
            betti_minimal=[list(b) for b in minimal],
            beta1_counts=[DegreeCount(degree=list(m.degree), count=m.count) for m in mins],
            uniquely_presented=unique,
            generators_used=binomials_out(gens, toric_service.variable_labels(self.S.n)),
        )

    def betti_count_by_fiber(self, b: Sequence[int]) -> int:
        """
        β_1 at b from the fiber graph: points joined when their supports
        meet; the count is the number of components minus one.
        """
        points = self.fiber(b).points
        if not points:
            return 0
        parent = list(range(len(points)))
        for i, u in enumerate(points):
            for j in range(i + 1, len(points)):
                v = points[j]
                if any(x and y for x, y in zip(u, v)):
                    ri, rj = binomial_algebra.find_root(parent, i), binomial_algebra.find_root(parent, j)
                    if ri != rj:
                        parent[ri] = rj
        roots = {binomial_algebra.find_root(parent, i) for i in range(len(points))}
        return len(roots) - 1

    def fiber_graph_mismatches(self, max_points: Optional[int] = None) -> list[IntVector]:
        """
        Degrees up to the largest Betti height where the fiber-graph count
        disagrees with the minimal generators; fibers above `max_points`
        are skipped.
        """
        limit = max_points or settings.max_fiber_points
        report = self.betti_elements()
        counts = {tuple(int(x) for x in dc.degree): dc.count for dc in report.beta1_counts}
        bound = max((self.S.height(b) for b in counts), default=0)
        bad = []
        for z in self.elements_up_to(bound):
            if len(self.fiber(z)) > limit:
                continue
            if self.betti_count_by_fiber(z) != counts.get(z, 0):
                bad.append(z)
        return bad

    # ---------- saturation ----------

    def is_saturated(self, max_multiple: int = 0) -> SaturationReport:
        points = lattice_core.zonotope_points(self.S.matrix)
        witness = next((c for c in points if not self.contains(c)), None)
        multiple = None
        if witness is not None and max_multiple > 0:
            multiple = self.multiple_in_semigroup(witness, max_multiple)
        if witness is None:
            logger.info("Semigroup is saturated ({} zonotope points)", len(points))
        else:
            logger.info("Semigroup is not saturated; witness {}", witness)
        return SaturationReport(
            saturated=witness is None,
            witness=list(witness) if witness is not None else None,
            checked_points=len(points),
            witness_multiple=multiple,
        )

    def approximation_element(self) -> IntVector:
        """Smallest a ∈ S, by (height, lex), with a + c ∈ S for every zonotope point c."""
        points = lattice_core.zonotope_points(self.S.matrix)
        zero = (0,) * self.S.d
        heap = [(0, zero)]
        seen = {zero}
        popped = 0
        while heap:
            _, a = heapq.heappop(heap)
            popped += 1
            if popped > settings.approx_candidate_limit:
                raise LimitExceeded(
                    f"no approximation element among the first {settings.approx_candidate_limit} elements"
                )
            if all(self.contains(vadd(a, c)) for c in points):
                logger.info("Approximation element {} after {} candidates", a, popped)
                return a
            for col in self.S.columns:
                s = vadd(a, col)
                if s not in seen:
                    seen.add(s)
                    heapq.heappush(heap, (self.S.height(s), s))
        raise LimitExceeded("candidate heap exhausted")


# ---------- degenerations ----------


def check_theorem_inclusion(S: SemigroupPresentation, w: Sequence[int]) -> InclusionReport:
    """Each b ∈ Bet(S) with the λ such that (b, λ) ∈ Bet(S_w)."""
    ctx = toric_service.build_context(S, w)
    base = SemigroupService(S).betti_elements()
    lifted = SemigroupService(ctx.degenerated).betti_elements()
    betti = [tuple(int(x) for x in b) for b in base.betti]
    betti_w = [tuple(int(x) for x in b) for b in lifted.betti]

    entries = []
    for b in betti:
        lambdas = sorted(c[-1] for c in betti_w if c[:-1] == b)
        if not lambdas:
            raise TheoryViolation(f"Betti element {b} has no lift to S_w for w = {ctx.weight}")
        entries.append(InclusionEntry(betti=list(b), lambdas=lambdas))
    extras = [list(c) for c in betti_w if c[:-1] not in set(betti)]
    return InclusionReport(weight=list(ctx.weight), entries=entries, extras=extras)


def approx_degeneration(ctx: DegenerationContext, a: Sequence[int]) -> ApproximationCertificate:
    """
    δ with (a, δ) + \\overline{S_w} ⊂ S_w, built point by point over the
    zonotope of A_w and then verified.
    """
    a = as_vector(a)
    base = SemigroupService(ctx.base)
    lifted = SemigroupService(ctx.degenerated)
    w = ctx.weight

    l = base.member(a)
    if l is None:
        raise HypothesisViolated(f"{a} is not in S")
    bad = [c for c in lattice_core.zonotope_points(ctx.base.matrix) if not base.contains(vadd(a, c))]
    if bad:
        raise HypothesisViolated(f"{a} does not approximate the saturation: {bad[0]} fails")
    floor = dot(l, w)

    entries = []
    for p in lattice_core.zonotope_points(ctx.matrix_w):
        c, top = p[:-1], p[-1]
        if lifted.contains(p):
            case, delta = "1", floor
        elif lifted.contains(vadd(a + (0,), p)):
            case, delta = "2.1", floor
        else:
            beta = base.member(vadd(a, c))
            assert beta is not None
            case, delta = "2.2", max(dot(beta, w) - top, floor)
        entries.append(PointCase(point=list(p), case=case, delta=delta))

    delta = max(e.delta for e in entries)
    corner = a + (delta,)
    if not lifted.contains(corner):
        raise CertificationFailure(f"({a}, {delta}) is not in S_w")
    for e in entries:
        if not lifted.contains(vadd(corner, e.point)):
            raise CertificationFailure(f"({a}, {delta}) + {tuple(e.point)} is not in S_w")
    logger.info("Approximation certificate for a = {}, w = {}: δ = {}", a, w, delta)
    return ApproximationCertificate(a=list(a), weight=list(w), delta=delta, entries=entries)


def verify_certificate_samples(
    ctx: DegenerationContext,
    cert: ApproximationCertificate,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> ApproximationCertificate:
    """Re-check the certificate on random elements of \\overline{S_w}: a zonotope point plus an element of S_w."""
    samples = samples or settings.certificate_samples
    rng = random.Random(settings.random_seed if seed is None else seed)
    lifted = SemigroupService(ctx.degenerated)
    points = lattice_core.zonotope_points(ctx.matrix_w)
    corner = tuple(cert.a) + (cert.delta,)
    for _ in range(samples):
        z = vadd(corner, rng.choice(points))
        for col in ctx.matrix_w.columns:
            z = vadd(z, vscale(rng.randint(0, 3), col))
        if not lifted.contains(z):
            raise CertificationFailure(f"sampled saturation element {z} escapes S_w")
    return cert.model_copy(update={"samples_checked": samples})


def is_minimal_gb(
    S: SemigroupPresentation, w: Sequence[int], tiebreak: Tiebreak = Tiebreak.lex
) -> bool:
    """
    Whether the minimal generating set we compute is already a Gröbner basis
    for the order refining w. Exact when S is uniquely presented.
    """
    order = toric_service.degeneration_order(w, tiebreak)
    gens = toric_service.minimal_toric_generators(S, order)
    return binomial_algebra.is_groebner(gens, order)


def saturation_ball_oracle(
    S: SemigroupPresentation, bound: Optional[int] = None
) -> Optional[IntVector]:
    """First lattice point of the cone with height ≤ bound that is not in S."""
    service = SemigroupService(S)
    if bound is None:
        bound = sum(service.heights)
    boxes = []
    for k in range(S.d):
        lo = sum(min(col[k], 0) * bound // h for col, h in zip(S.columns, service.heights))
        hi = sum(-(-max(col[k], 0) * bound // h) for col, h in zip(S.columns, service.heights))
        boxes.append(range(lo, hi + 1))

    candidates = [
        z for z in itertools.product(*boxes) if 0 <= S.height(z) <= bound
    ]
    candidates.sort(key=lambda z: (S.height(z), z))
    for z in candidates:
        if service.contains(z):
            continue
        if lattice_core.cone_member(z, S.matrix)[0]:
            return z
    return None


# ---------- unique presentation ----------


def mon_deg_certificate(gens: Sequence[Binomial], grading: GeneratorMatrix) -> MonDegCertificate:
    """
    Both monomials of every binomial minimally generate their monomial
    ideal and the generators sit in pairwise distinct degrees; together
    these force a unique minimal presentation.
    """
    monomials = [m for g in gens for m in (g.lead, g.trail)]
    minimal = not any(
        divides(m, other)
        for i, m in enumerate(monomials)
        for j, other in enumerate(monomials)
        if i != j
    )
    degrees = [grading.image(g.lead) for g in gens]
    distinct = len(set(degrees)) == len(degrees)
    return MonDegCertificate(
        monomials_minimal=minimal, distinct_degrees=distinct, holds=minimal and distinct
    )


def interval_semigroup(a: int) -> SemigroupPresentation:
    """⟨a, a+1, a+2⟩ with x, y, z in that order."""
    return toric_service.present(GeneratorMatrix.from_columns([(a,), (a + 1,), (a + 2,)]))


def _interval_params(q: int, w: Sequence[int]) -> IntVector:
    w = as_vector(w)
    if q < 1:
        raise InvalidParams("q must be at least 1")
    if len(w) != 3 or any(x < 0 for x in w) or not any(w):
        raise InvalidParams("w must be a nonzero weight in N^3")
    return w


def classify_interval_weight(q: int, w: Sequence[int]) -> IntervalClassification:
    w1, w2, w3 = _interval_params(q, w)
    if 2 * w2 >= w1 + w3:
        return IntervalClassification(IntervalCase.case1)
    if (q + 1) * w3 <= (q + 2) * w1:
        if (q + 2) * w3 > (q + 1) * w1 + 2 * w2:
            return IntervalClassification(IntervalCase.case2b)
        # x^{q+1-j} y^{2(j+1)} against z^{q+2+j}; the x side wins ties on degree
        for j in range(1, q + 2):
            if (q + 2 + j) * w3 > (q + 1 - j) * w1 + 2 * (j + 1) * w2:
                return IntervalClassification(IntervalCase.case2a, n=j, boundary=j == q + 1)
        return IntervalClassification(IntervalCase.case2a)
    for i in range(q + 1):
        if (q + i + 3) * w1 >= 2 * (i + 1) * w2 + (q - i) * w3:
            return IntervalClassification(IntervalCase.case3b, n=i, boundary=i == q)
    return IntervalClassification(IntervalCase.case3a)


def _mono(x: int = 0, y: int = 0, z: int = 0) -> IntVector:
    return (x, y, z)


def _interval_shape(q: int, cls: IntervalClassification) -> list[Binomial]:
    case = cls.case
    if case is IntervalCase.case1:
        return [
            Binomial(_mono(y=2), _mono(x=1, z=1)),
            Binomial(_mono(x=q + 2), _mono(z=q + 1)),
        ]
    if case is IntervalCase.case2b:
        return [
            Binomial(_mono(x=1, z=1), _mono(y=2)),
            Binomial(_mono(x=q + 2), _mono(z=q + 1)),
            Binomial(_mono(z=q + 2), _mono(x=q + 1, y=2)),
        ]
    if case is IntervalCase.case2a:
        basis = [
            Binomial(_mono(x=1, z=1), _mono(y=2)),
            Binomial(_mono(x=q + 2), _mono(z=q + 1)),
        ]
        stop = q + 2 if cls.n is None else cls.n
        basis += [
            Binomial(_mono(x=q + 1 - j, y=2 * (j + 1)), _mono(z=q + 2 + j)) for j in range(stop)
        ]
        if cls.n is not None:
            n = cls.n
            basis.append(Binomial(_mono(z=q + 2 + n), _mono(x=q + 1 - n, y=2 * (n + 1))))
        return basis

    basis = [
        Binomial(_mono(x=1, z=1), _mono(y=2)),
        Binomial(_mono(z=q + 1), _mono(x=q + 2)),
    ]
    stop = q + 1 if cls.n is None else cls.n
    basis += [
        Binomial(_mono(y=2 * (i + 1), z=q - i), _mono(x=q + i + 3)) for i in range(stop)
    ]
    if cls.n is not None:
        n = cls.n
        basis.append(Binomial(_mono(x=q + n + 3), _mono(y=2 * (n + 1), z=q - n)))
    return basis


def expected_interval_gb(
    q: int, w: Sequence[int]
) -> tuple[IntervalClassification, list[Binomial]]:
    """
    Reduced w-degrevlex basis of I_A for ⟨2q+2, 2q+3, 2q+4⟩, by weight case.
    Which side leads inside a case still depends on w (in case 1, x^{q+2}
    against z^{q+1}), so every element is oriented by the order itself.
    """
    cls = classify_interval_weight(q, w)
    order = toric_service.degeneration_order(w, Tiebreak.degrevlex, (0, 1, 2))
    return cls, [g.oriented(order) for g in _interval_shape(q, cls)]


def check_unique_presentation_family(q: int, w: Sequence[int]) -> UniquePresentationReport:
    """
    Degenerate ⟨2q+2, 2q+3, 2q+4⟩ along w (w-degrevlex, x > y > z), compare
    the reduced basis with the case shape and confirm I_{A_w} is uniquely
    presented.
    """
    cls, expected = expected_interval_gb(q, w)
    w = as_vector(w)
    S = interval_semigroup(2 * q + 2)
    ctx = toric_service.build_context(S, w)

    gb = toric_service.degeneration_basis(ctx, Tiebreak.degrevlex, (0, 1, 2))
    reduced = binomial_algebra.reduce_basis(gb).elements
    leads_match = sorted(g.lead for g in reduced) == sorted(g.lead for g in expected)
    count_match = len(reduced) == len(expected)
    if cls.boundary:
        logger.warning("q = {}, w = {}: chain turns at its last index {}", q, w, cls.n)

    gens_t = [toric_service.degenerate_binomial(g, w, gb.order) for g in gb.elements]
    w1, w2, w3 = w
    if cls.case is IntervalCase.case2b and (q + 2) * w1 == (q + 1) * w3:
        gens_t = [
            Binomial((1, 0, 1, 0), (0, 2, 0, w1 + w3 - 2 * w2)),
            Binomial((q + 2, 0, 0, 0), (0, 0, q + 1, 0)),
        ]
    mon_deg = mon_deg_certificate(gens_t, ctx.matrix_w)

    unique = SemigroupService(ctx.degenerated).betti_elements().uniquely_presented
    if not unique:
        raise TheoryViolation(f"I_(A_w) is not uniquely presented for q = {q}, w = {w}")

    labels = ["x", "y", "z"]
    return UniquePresentationReport(
        q=q,
        weight=list(w),
        case=cls.case.value,
        n=cls.n,
        boundary_flag=cls.boundary,
        expected_basis=binomials_out(expected, labels),
        reduced_basis=binomials_out(reduced, labels),
        leads_match=leads_match,
        count_match=count_match,
        uniquely_presented=unique,
        mon_deg=mon_deg,
    )


def lawrence_uniquely_presented(S: SemigroupPresentation, weights: Iterable[Sequence[int]]) -> bool:
    """Every degeneration of the Lawrence lifting of S along the given weights is uniquely presented."""
    L = toric_service.present(toric_service.lawrence_matrix(S.matrix))
    for w in weights:
        ctx = toric_service.build_context(L, w)
        if not SemigroupService(ctx.degenerated).betti_elements().uniquely_presented:
            logger.error("Lawrence degeneration along {} is not uniquely presented", as_vector(w))
            return False
    return True
