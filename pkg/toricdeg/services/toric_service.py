# toricdeg/services/toric_service.py
from __future__ import annotations

from functools import lru_cache
from typing import Optional, Sequence

from loguru import logger

from toricdeg.core.exceptions import DimensionMismatch, InvalidParams
from toricdeg.models.binomial import Binomial, GroebnerBasis, TermOrder, Tiebreak
from toricdeg.models.lattice import GeneratorMatrix, IntVector, as_vector, dot
from toricdeg.models.semigroup import DegenerationContext, SemigroupPresentation
from toricdeg.schemas.common import binomials_out
from toricdeg.schemas.toric import TheoremMainReport, ToricIdealReport
from toricdeg.services import binomial_algebra, lattice_core


def variable_labels(n: int, with_t: bool = False) -> list[str]:
    labels = [f"x{i + 1}" for i in range(n)]
    return labels + ["t"] if with_t else labels


# ---------- presentations ----------


def present(A: GeneratorMatrix) -> SemigroupPresentation:
    if A.count == 0:
        raise InvalidParams("a semigroup needs at least one generator")
    zero = [i + 1 for i, col in enumerate(A.columns) if not any(col)]
    if zero:
        raise InvalidParams(f"generators {zero} are zero; drop them from the configuration")
    pointed, functional = lattice_core.is_pointed(A)
    return SemigroupPresentation(
        matrix=A,
        pointed=pointed,
        functional=functional if pointed else None,
        full_lattice=lattice_core.is_full_lattice(A),
        kernel_basis=tuple(lattice_core.lattice_kernel(A)),
    )


def pi(A: GeneratorMatrix, u: Sequence[int]) -> IntVector:
    if len(u) != A.count:
        raise DimensionMismatch(f"exponent vector of length {len(u)} for {A.count} generators")
    if any(x < 0 for x in u):
        raise InvalidParams("exponent vectors are nonnegative")
    return A.image(u)


def binomial_from_vector(u: Sequence[int]) -> Binomial:
    """x^{u+} − x^{u−}."""
    return Binomial(tuple(max(x, 0) for x in u), tuple(max(-x, 0) for x in u))


# ---------- toric ideals ----------


@lru_cache(maxsize=256)
def _toric_ideal(S: SemigroupPresentation) -> tuple[Binomial, ...]:
    n = S.n
    gens = [binomial_from_vector(u) for u in S.kernel_basis]
    grading = None
    if S.pointed:
        grading = tuple(S.height(col) for col in S.columns)
    saturated = binomial_algebra.saturate_variables(gens, n, grading)
    gb = binomial_algebra.buchberger(saturated, TermOrder.plain(n))
    logger.debug("Toric ideal of {} generators: {} basis elements", n, len(gb))
    return gb.elements


def toric_ideal(S: SemigroupPresentation) -> list[Binomial]:
    """Generators of I_A: the reduced basis in plain degrevlex."""
    return list(_toric_ideal(S))


def minimal_toric_generators(
    S: SemigroupPresentation, order: Optional[TermOrder] = None
) -> list[Binomial]:
    """A minimal generating set of I_A (pointed S), smallest degrees first."""
    mins = binomial_algebra.minimal_generators(toric_ideal(S), S.matrix, order)
    return [g for entry in mins for g in entry.generators]


def lawrence_matrix(A: GeneratorMatrix) -> GeneratorMatrix:
    """Columns (a_i, e_i) followed by (0, e_i): the stacked matrix [[A, 0], [I, I]]."""
    n = A.count
    zero = (0,) * A.ambient_dim
    cols = [tuple(col) + tuple(1 if j == i else 0 for j in range(n)) for i, col in enumerate(A.columns)]
    cols += [zero + tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    return GeneratorMatrix.from_columns(cols)


def lawrence_defining_set(S: SemigroupPresentation) -> list[Binomial]:
    """x^u y^v − x^v y^u for the basis elements x^u − x^v of I_A."""
    return [Binomial(g.lead + g.trail, g.trail + g.lead) for g in toric_ideal(S)]


# ---------- degeneration ----------


def build_context(S: SemigroupPresentation, w: Sequence[int]) -> DegenerationContext:
    w = as_vector(w)
    if len(w) != S.n:
        raise DimensionMismatch(f"weight of length {len(w)} for {S.n} generators")
    if any(x < 0 for x in w):
        raise InvalidParams("weights are nonnegative")
    cols = [tuple(col) + (wi,) for col, wi in zip(S.columns, w)]
    cols.append((0,) * S.d + (1,))
    A_w = GeneratorMatrix.from_columns(cols)
    return DegenerationContext(base=S, weight=w, degenerated=present(A_w))


def degeneration_order(
    w: Sequence[int],
    tiebreak: Tiebreak = Tiebreak.lex,
    permutation: Optional[Sequence[int]] = None,
) -> TermOrder:
    return TermOrder(weight=as_vector(w), tiebreak=tiebreak, permutation=tuple(permutation or ()))


def degenerate_binomial(
    g: Binomial, w: Sequence[int], order: Optional[TermOrder] = None
) -> Binomial:
    """g_t = x^u − x^v t^{w·u − w·v}, with g reoriented so that w·u ≥ w·v."""
    wu, wv = dot(w, g.lead), dot(w, g.trail)
    if wu < wv or (wu == wv and order is not None and order.key(g.trail) > order.key(g.lead)):
        g = Binomial(g.trail, g.lead)
        wu, wv = wv, wu
    return Binomial(g.lead + (0,), g.trail + (wu - wv,))


def degeneration_basis(
    ctx: DegenerationContext,
    tiebreak: Tiebreak = Tiebreak.lex,
    permutation: Optional[Sequence[int]] = None,
) -> GroebnerBasis:
    """Minimal Gröbner basis of I_A for the order refining w."""
    order = degeneration_order(ctx.weight, tiebreak, permutation)
    S = ctx.base
    gens = minimal_toric_generators(S, order) if S.pointed else toric_ideal(S)
    return binomial_algebra.buchberger(gens, order, reduced=False)


def degenerate_ideal(
    ctx: DegenerationContext,
    tiebreak: Tiebreak = Tiebreak.lex,
    permutation: Optional[Sequence[int]] = None,
) -> list[Binomial]:
    """G_t = {g_t : g ∈ G} for a Gröbner basis G refining w."""
    gb = degeneration_basis(ctx, tiebreak, permutation)
    return [degenerate_binomial(g, ctx.weight, gb.order) for g in gb.elements]


def dehomogenize_t(gens: Sequence[Binomial]) -> list[Binomial]:
    """Set t = 1 (the last variable); binomials that collapse are dropped."""
    out = []
    for g in gens:
        lead, trail = g.lead[:-1], g.trail[:-1]
        if lead != trail:
            out.append(Binomial(lead, trail))
    return out


def dehomogenized_generates(ctx: DegenerationContext, gens_t: Sequence[Binomial]) -> bool:
    return binomial_algebra.ideal_equal(
        dehomogenize_t(gens_t), toric_ideal(ctx.base), ctx.base.n
    )


def verify_theorem_main(
    ctx: DegenerationContext,
    tiebreak: Tiebreak = Tiebreak.lex,
    permutation: Optional[Sequence[int]] = None,
) -> TheoremMainReport:
    """Check (I_A)_t = I_{A_w} by comparing reduced bases."""
    n1 = ctx.base.n + 1
    gb = degeneration_basis(ctx, tiebreak, permutation)
    gens_t = [degenerate_binomial(g, ctx.weight, gb.order) for g in gb.elements]
    canon = TermOrder.plain(n1)
    reduced_t = binomial_algebra.buchberger(gens_t, canon).elements
    reduced_w = tuple(toric_ideal(ctx.degenerated))
    equal = reduced_t == reduced_w
    if equal:
        logger.info("Degeneration of weight {} matches the toric ideal of A_w", ctx.weight)
    else:
        logger.error("Degeneration of weight {} differs from the toric ideal of A_w", ctx.weight)

    labels = variable_labels(ctx.base.n)
    labels_t = variable_labels(ctx.base.n, with_t=True)
    return TheoremMainReport(
        weight=list(ctx.weight),
        degenerated_columns=[list(c) for c in ctx.matrix_w.columns],
        tiebreak=tiebreak.value,
        groebner_basis=binomials_out(gb.elements, labels),
        degenerated_generators=binomials_out(gens_t, labels_t),
        reduced_degeneration=binomials_out(reduced_t, labels_t),
        reduced_toric_w=binomials_out(reduced_w, labels_t),
        equal=equal,
        dehomogenized_generates=dehomogenized_generates(ctx, gens_t),
    )


def describe(
    S: SemigroupPresentation,
    weight: Optional[Sequence[int]] = None,
    tiebreak: Tiebreak = Tiebreak.lex,
    permutation: Optional[Sequence[int]] = None,
    labels: Optional[Sequence[str]] = None,
) -> ToricIdealReport:
    """
    Generators and a reduced basis of I_A. Without a weight the basis is the
    plain degrevlex one; with a weight it is taken in the order refining w.
    """
    labels = labels or variable_labels(S.n)
    gens = minimal_toric_generators(S) if S.pointed else toric_ideal(S)
    if weight is None:
        basis = toric_ideal(S)
        used = Tiebreak.degrevlex
    else:
        gb = degeneration_basis(build_context(S, weight), tiebreak, permutation)
        basis = list(binomial_algebra.reduce_basis(gb).elements)
        used = tiebreak
    logger.info("Toric ideal: {} generators, basis of {}", len(gens), len(basis))
    return ToricIdealReport(
        columns=[list(c) for c in S.columns],
        pointed=S.pointed,
        functional=list(S.functional) if S.functional is not None else None,
        full_lattice=S.full_lattice,
        kernel_basis=[list(u) for u in S.kernel_basis],
        generators=binomials_out(gens, labels),
        groebner_basis=binomials_out(basis, labels),
        tiebreak=used.value,
        weight=list(weight) if weight is not None else None,
    )
