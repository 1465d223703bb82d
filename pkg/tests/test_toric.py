import random

import pytest

from toricdeg.core.exceptions import DimensionMismatch, InvalidParams
from toricdeg.models.binomial import Binomial, Tiebreak
from toricdeg.models.lattice import GeneratorMatrix, dot
from toricdeg.services import binomial_algebra, toric_service

A, B, C, D = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)


def mono(*parts):
    return tuple(map(sum, zip(*parts)))


def unordered(gens):
    return {frozenset((g.lead, g.trail)) for g in gens}


@pytest.fixture
def scroll(make_semigroup):
    return make_semigroup((1, 0), (1, 1), (1, 2), (1, 3))


def test_present_records_lattice_facts(make_semigroup):
    S = make_semigroup(6, 10, 15)
    assert S.pointed
    assert S.full_lattice
    assert len(S.kernel_basis) == 2
    assert S.height((30,)) > 0


def test_present_rejects_zero_columns():
    with pytest.raises(InvalidParams):
        toric_service.present(GeneratorMatrix.from_columns([(1, 0), (0, 0)]))


def test_not_pointed_presentation(make_semigroup):
    S = make_semigroup(1, -1)
    assert not S.pointed
    assert S.functional is None


def test_pi_checks_its_input(make_semigroup):
    S = make_semigroup(4, 5, 6)
    assert toric_service.pi(S.matrix, (1, 1, 1)) == (15,)
    with pytest.raises(DimensionMismatch):
        toric_service.pi(S.matrix, (1, 1))
    with pytest.raises(InvalidParams):
        toric_service.pi(S.matrix, (1, -1, 0))


def test_toric_ideal_of_twisted_cubic(scroll):
    expected = {
        Binomial(mono(B, B), mono(A, C)),
        Binomial(mono(B, C), mono(A, D)),
        Binomial(mono(C, C), mono(B, D)),
    }
    assert set(toric_service.toric_ideal(scroll)) == expected


def test_toric_ideal_of_non_pointed_semigroup(make_semigroup):
    S = make_semigroup(1, -1)
    gens = toric_service.toric_ideal(S)
    assert binomial_algebra.ideal_equal(gens, [Binomial((1, 1), (0, 0))], 2)


def test_minimal_generators_of_interval(make_semigroup):
    S = make_semigroup(4, 5, 6)
    gens = toric_service.minimal_toric_generators(S)
    assert unordered(gens) == unordered(
        [Binomial((0, 2, 0), (1, 0, 1)), Binomial((3, 0, 0), (0, 0, 2))]
    )


def test_lawrence_matrix():
    L = toric_service.lawrence_matrix(GeneratorMatrix.from_columns([(1,), (2,)]))
    assert L.columns == ((1, 1, 0), (2, 0, 1), (0, 1, 0), (0, 0, 1))


def test_lawrence_defining_set(make_semigroup):
    S = make_semigroup(1, 2)
    (g,) = toric_service.lawrence_defining_set(S)
    assert unordered([g]) == {frozenset(((2, 0, 0, 1), (0, 1, 2, 0)))}


def test_build_context_appends_weight_row(a_of_m):
    ctx = toric_service.build_context(a_of_m(3), (1, 1, 1))
    assert ctx.matrix_w.columns == ((1, 0, 1), (1, 1, 1), (3, 4, 1), (0, 0, 1))
    assert ctx.t_index == 3


def test_build_context_validates_weight(make_semigroup):
    S = make_semigroup(6, 10, 15)
    with pytest.raises(DimensionMismatch):
        toric_service.build_context(S, (1, 1))
    with pytest.raises(InvalidParams):
        toric_service.build_context(S, (1, -1, 1))


def test_degenerate_binomial_orients_by_weight():
    g = Binomial((0, 3, 0), (5, 0, 0))
    assert toric_service.degenerate_binomial(g, (1, 1, 1)) == Binomial((5, 0, 0, 0), (0, 3, 0, 2))


def test_degenerate_binomial_tie_uses_order():
    g = Binomial((0, 0, 3), (2, 2, 0))
    order = toric_service.degeneration_order((2, 1, 2), Tiebreak.degrevlex)
    assert toric_service.degenerate_binomial(g, (2, 1, 2), order) == Binomial(
        (2, 2, 0, 0), (0, 0, 3, 0)
    )


def test_dehomogenize_drops_collapsed_binomials():
    gens = [Binomial((1, 0, 0), (0, 1, 2)), Binomial((0, 0, 1), (0, 0, 0))]
    assert toric_service.dehomogenize_t(gens) == [Binomial((1, 0), (0, 1))]


def test_degeneration_basis_of_scroll(scroll):
    ctx = toric_service.build_context(scroll, (3, 7, 2, 5))
    gb = toric_service.degeneration_basis(ctx, Tiebreak.lex)
    reduced = binomial_algebra.reduce_basis(gb)
    assert set(reduced.elements) == {
        Binomial(mono(B, B), mono(A, C)),
        Binomial(mono(B, C), mono(A, D)),
        Binomial(mono(B, D), mono(C, C)),
        Binomial(mono(A, D, D), mono(C, C, C)),
    }


def test_theorem_main_on_numerical_example(make_semigroup):
    ctx = toric_service.build_context(make_semigroup(6, 10, 15), (1, 1, 1))
    report = toric_service.verify_theorem_main(ctx)
    assert report.equal
    assert report.dehomogenized_generates
    assert report.degenerated_columns == [[6, 1], [10, 1], [15, 1], [0, 1]]


@pytest.mark.parametrize("tiebreak", [Tiebreak.lex, Tiebreak.degrevlex])
def test_theorem_main_on_scroll(scroll, tiebreak):
    ctx = toric_service.build_context(scroll, (3, 7, 2, 5))
    assert toric_service.verify_theorem_main(ctx, tiebreak).equal


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_theorem_main_on_a_of_m(a_of_m, m):
    ctx = toric_service.build_context(a_of_m(m), (1, 1, 1))
    assert toric_service.verify_theorem_main(ctx).equal


def test_theorem_main_with_zero_weight(make_semigroup):
    ctx = toric_service.build_context(make_semigroup(4, 5, 6), (0, 0, 0))
    assert toric_service.verify_theorem_main(ctx, Tiebreak.degrevlex).equal


def test_describe_with_and_without_weight(scroll):
    plain = toric_service.describe(scroll, labels=["a", "b", "c", "d"])
    assert plain.tiebreak == "degrevlex"
    assert plain.weight is None
    assert {g.text for g in plain.groebner_basis} == {"b^2 - a*c", "b*c - a*d", "c^2 - b*d"}

    weighted = toric_service.describe(scroll, (3, 7, 2, 5), labels=["a", "b", "c", "d"])
    assert weighted.weight == [3, 7, 2, 5]
    assert len(weighted.groebner_basis) == 4


WEIGHTED = [
    (((1, 0), (1, 1), (1, 2), (1, 3)), (3, 7, 2, 5)),
    (((6,), (10,), (15,)), (1, 1, 1)),
    (((1, 0), (1, 1), (3, 4)), (1, 1, 1)),
    (((4,), (5,), (6,)), (2, 1, 2)),
]


@pytest.mark.parametrize("seed", range(5))
@pytest.mark.parametrize("columns,w", WEIGHTED)
def test_degenerated_matrix_adds_weight_plus_t(make_semigroup, columns, w, seed):
    S = make_semigroup(*columns)
    ctx = toric_service.build_context(S, w)
    rng = random.Random(seed)
    u = tuple(rng.randint(0, 9) for _ in range(S.n))
    k = rng.randint(0, 9)
    assert toric_service.pi(ctx.matrix_w, u + (k,)) == toric_service.pi(S.matrix, u) + (
        dot(u, w) + k,
    )


@pytest.mark.parametrize("columns,w", WEIGHTED)
def test_degenerated_binomials_are_homogeneous(make_semigroup, columns, w):
    S = make_semigroup(*columns)
    ctx = toric_service.build_context(S, w)
    grading = ctx.matrix_w.columns
    for g in toric_service.toric_ideal(S):
        assert toric_service.degenerate_binomial(g, w).is_homogeneous(grading)
    for g in toric_service.degenerate_ideal(ctx, Tiebreak.degrevlex):
        assert g.is_homogeneous(grading)


@pytest.mark.parametrize("tiebreak", [Tiebreak.lex, Tiebreak.degrevlex])
@pytest.mark.parametrize("columns,w", WEIGHTED)
def test_setting_t_to_one_recovers_toric_ideal(make_semigroup, columns, w, tiebreak):
    S = make_semigroup(*columns)
    ctx = toric_service.build_context(S, w)
    released = toric_service.dehomogenize_t(toric_service.degenerate_ideal(ctx, tiebreak))
    assert binomial_algebra.ideal_equal(released, toric_service.toric_ideal(S), S.n)
