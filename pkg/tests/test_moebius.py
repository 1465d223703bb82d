import pytest

from toricdeg.core.exceptions import (
    MissingDegenerationData,
    MissingUniqueBetti,
    SubsetLimitExceeded,
)
from toricdeg.models.moebius import SubsetWitness
from toricdeg.services import corpus_service, moebius_service
from toricdeg.services.moebius_service import MoebiusService

TWO_THREE = {0: 1, 1: 0, 2: -1, 3: -1, 4: 0, 5: 1, 6: 1}


@pytest.fixture
def two_three(make_semigroup):
    return make_semigroup(2, 3)


@pytest.fixture
def coprime_235():
    return corpus_service.pairwise_coprime((2, 3, 5)).presentation


@pytest.mark.parametrize("z,mu", sorted(TWO_THREE.items()))
def test_bruteforce_on_two_three(two_three, z, mu):
    assert MoebiusService(two_three).mu_bruteforce((z,)) == mu


def test_table_matches_bruteforce(two_three):
    table = MoebiusService(two_three).mobius_table(6)
    assert {z[0]: v for z, v in table.items()} == {k: v for k, v in TWO_THREE.items() if k != 1}


@pytest.mark.parametrize("z", range(13))
def test_chain_count_agrees_with_recursion(two_three, z):
    service = MoebiusService(two_three)
    assert service.chain_count_mu((z,)) == service.mu_bruteforce((z,))


def test_closed_formula_on_two_three(two_three):
    ctx = moebius_service.build_moebius_context(two_three)
    assert ctx.unique_betti == (6,)
    for z, mu in TWO_THREE.items():
        assert moebius_service.mu_closed(ctx, (z,)) == mu


def test_subset_witnesses(two_three):
    ctx = moebius_service.build_moebius_context(two_three)
    assert moebius_service.a_z(ctx, (2,)) == [SubsetWitness(subset=(0,), k=0)]
    assert moebius_service.a_z(ctx, (0,)) == [SubsetWitness(subset=(), k=0)]
    assert moebius_service.a_z(ctx, (1,)) == []


def test_subset_limit(two_three):
    ctx = moebius_service.build_moebius_context(two_three)
    with pytest.raises(SubsetLimitExceeded):
        moebius_service.a_z(ctx, (5,), max_n=1)


def test_closed_formula_with_non_trivial_binomials(make_semigroup):
    S = make_semigroup(6, 10, 15)
    ctx = moebius_service.build_moebius_context(S)
    service = MoebiusService(S)
    for z in range(0, 61):
        assert moebius_service.mu_closed(ctx, (z,)) == service.mu_bruteforce((z,)), z


def test_closed_formula_needs_one_betti_element(make_semigroup):
    with pytest.raises(MissingUniqueBetti):
        moebius_service.build_moebius_context(make_semigroup(4, 5, 6))


def test_degeneration_context(coprime_235):
    ctx = moebius_service.build_moebius_context(coprime_235, (15, 10, 6))
    assert ctx.unique_betti == (30,)
    assert ctx.d_w == 30
    assert ctx.has_degeneration


def test_degeneration_needs_unique_lifted_betti(coprime_235):
    with pytest.raises(MissingDegenerationData):
        moebius_service.build_moebius_context(coprime_235, (1, 1, 1))


def test_degenerated_formula_matches_table(coprime_235):
    ctx = moebius_service.build_moebius_context(coprime_235, (15, 10, 6))
    lifted = ctx.degenerated
    table = MoebiusService(lifted).mobius_table(45)
    for z in range(0, 46):
        for lam in range(0, 50):
            if not 0 <= lifted.height((z, lam)) <= 45:
                continue
            assert moebius_service.mu_degeneration(ctx, (z,), lam) == table.get((z, lam), 0), (z, lam)


def test_b_z_needs_degeneration(two_three):
    ctx = moebius_service.build_moebius_context(two_three)
    with pytest.raises(MissingDegenerationData):
        moebius_service.b_z(ctx, (6,), 0)


def test_b_z_on_lifted_generators(coprime_235):
    ctx = moebius_service.build_moebius_context(coprime_235, (15, 10, 6))
    # the extra column (0, 1) of S_w is index 3
    subsets = {w.subset for w in moebius_service.b_z(ctx, (15,), 16)}
    assert (0, 3) in subsets


def test_report_with_closed_formula(two_three):
    report = moebius_service.moebius_report(two_three, (5,))
    assert report.brute_force == 1
    assert report.closed == 1
    assert report.agreement
    assert report.downgraded is None


def test_report_downgrades_without_unique_betti(make_semigroup):
    report = moebius_service.moebius_report(make_semigroup(4, 5, 6), (10,))
    assert report.closed is None
    assert report.downgraded
    assert report.brute_force == MoebiusService(make_semigroup(4, 5, 6)).mu_bruteforce((10,))


def test_report_lambda_needs_weight(two_three):
    with pytest.raises(MissingDegenerationData):
        moebius_service.moebius_report(two_three, (6,), lam=3)


def test_report_on_degeneration(coprime_235):
    report = moebius_service.moebius_report(coprime_235, (30,), lam=30, w=(15, 10, 6))
    assert report.d_w == 30
    assert report.agreement
