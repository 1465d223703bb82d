import pytest

from toricdeg.core.exceptions import InvalidParams
from toricdeg.models.binomial import Tiebreak
from toricdeg.models.corpus import FamilyName, IntervalCase
from toricdeg.services import binomial_algebra, corpus_service, toric_service
from toricdeg.services.semigroup_service import SemigroupService


def unordered(gens):
    return {frozenset((g.lead, g.trail)) for g in gens}


@pytest.mark.parametrize("q", [1, 2, 3])
def test_interval_even_generators_and_betti(q):
    instance = corpus_service.corpus_family("interval_even", [q])
    a = 2 * q + 2
    assert instance.presentation.columns == ((a,), (a + 1,), (a + 2,))
    S = instance.presentation
    assert unordered(toric_service.minimal_toric_generators(S)) == unordered(
        instance.expected.minimal_generators
    )
    report = SemigroupService(S).betti_elements()
    assert [tuple(b) for b in report.betti] == list(instance.expected.betti)


def test_interval_even_notes_weight_case():
    instance = corpus_service.corpus_family(FamilyName.interval_even, [1, 2, 1, 2])
    assert instance.weight == (2, 1, 2)
    assert instance.expected.notes == ("weight case 2a",)


@pytest.mark.parametrize("params", [[1, 2, 1, 2], [1, 0, 1, 1]])
def test_interval_even_expected_basis_matches_computation(params):
    instance = corpus_service.corpus_family("interval_even", params)
    ctx = toric_service.build_context(instance.presentation, instance.weight)
    gb = toric_service.degeneration_basis(ctx, Tiebreak.degrevlex, (0, 1, 2))
    assert set(binomial_algebra.reduce_basis(gb).elements) == set(instance.expected.groebner_basis)


def test_interval_even_expected_basis_shape():
    expected = corpus_service.corpus_family("interval_even", [1, 2, 1, 2]).expected
    assert expected.classification.case is IntervalCase.case2a
    assert expected.classification.n == 1
    assert {g.lead for g in expected.groebner_basis} == {(1, 0, 1), (3, 0, 0), (2, 2, 0), (0, 0, 4)}

    bare = corpus_service.corpus_family("interval_even", [1]).expected
    assert bare.classification is None
    assert bare.groebner_basis == ()


def test_interval_even_unique_presentation_is_not_a_single_betti_element():
    instance = corpus_service.corpus_family("interval_even", [1, 1, 3, 1])
    assert instance.expected.uniquely_presented_w is True
    assert instance.expected.unique_betti_w is None
    ctx = toric_service.build_context(instance.presentation, instance.weight)
    assert len(SemigroupService(ctx.degenerated).betti_elements().betti) == 2


def test_interval_uniq():
    instance = corpus_service.corpus_family("interval_uniq", [2, 1, 3, 1])
    assert instance.presentation.columns == ((4,), (5,), (6,))
    assert instance.expected.uniquely_presented_w is True
    with pytest.raises(InvalidParams):
        corpus_service.corpus_family("interval_uniq", [1])


def test_pairwise_coprime_levels():
    unit = corpus_service.pairwise_coprime((2, 3, 5), (1, 1, 1))
    assert unit.presentation.columns == ((15,), (10,), (6,))
    assert unit.expected.betti == ((30,),)
    assert unit.expected.betti_w == ((30, 3), (30, 5))
    assert unit.expected.unique_betti_w is False

    equal = corpus_service.pairwise_coprime((2, 3, 5), (15, 10, 6))
    assert equal.expected.betti_w == ((30, 30),)
    assert equal.expected.unique_betti_w is True


def test_pairwise_coprime_predictions_match_computation():
    instance = corpus_service.pairwise_coprime((2, 3, 5), (1, 1, 1))
    ctx = toric_service.build_context(instance.presentation, instance.weight)
    report = SemigroupService(ctx.degenerated).betti_elements()
    assert {tuple(b) for b in report.betti} == set(instance.expected.betti_w)


@pytest.mark.parametrize("bs", [(2, 4), (3,), (1, 2)])
def test_pairwise_coprime_rejects_bad_params(bs):
    with pytest.raises(InvalidParams):
        corpus_service.pairwise_coprime(bs)


@pytest.mark.parametrize("m", [1, 2, 3, 5])
def test_a_of_m_facts(m):
    instance = corpus_service.corpus_family("A_of_m", [m])
    assert instance.weight == (1, 1, 1)
    if m <= 2:
        assert instance.expected.saturated_w is True
        assert instance.expected.witness is None
    else:
        assert instance.expected.saturated_w is False
        assert instance.expected.witness == (2, 2, 1)


def test_a_of_m_odd_note():
    instance = corpus_service.corpus_family("A_of_m", [3])
    assert instance.expected.notes == ("(4,4,2) = (2)·(2,2,1) lies in S_w",)


def test_lawrence_family():
    instance = corpus_service.corpus_family("lawrence", [1, 2])
    assert instance.presentation.columns == ((1, 1, 0), (2, 0, 1), (0, 1, 0), (0, 0, 1))
    assert instance.expected.uniquely_presented_w is True
    assert instance.expected.unique_betti_w is None
    with pytest.raises(InvalidParams):
        corpus_service.corpus_family("lawrence", [0, 2])


def test_unknown_family():
    with pytest.raises(InvalidParams):
        corpus_service.corpus_family("no_such_family", [1])


def test_weight_of_wrong_length():
    with pytest.raises(InvalidParams):
        corpus_service.corpus_family("interval_even", [1, 2, 1])
