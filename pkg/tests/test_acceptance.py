import pytest

from toricdeg.core.exceptions import UsageError
from toricdeg.models.corpus import IntervalCase
from toricdeg.services import acceptance_service, semigroup_service
from toricdeg.services.acceptance_service import AcceptanceService


def test_corpus_files_come_in_pairs(corpus_dir):
    files = AcceptanceService(corpus_dir, seed=0).corpus_files()
    assert files
    for path in files:
        assert path.with_name(path.stem + ".expected.json").exists()


@pytest.mark.parametrize("name", ["1-1", "scroll", "saturation-m3", "grob1-q1"])
def test_corpus_entry_matches_expectation(corpus_dir, name):
    outcome = AcceptanceService(corpus_dir, seed=0).check_entry(corpus_dir / f"{name}.json")
    assert outcome is True or outcome[0], outcome


def test_weights_per_case_cover_every_case():
    weights = acceptance_service.weights_per_case(1, per_case=2)
    for case, ws in weights.items():
        assert ws, case
        for w in ws:
            assert semigroup_service.classify_interval_weight(1, w).case is case
    assert set(weights) == set(IntervalCase)


def test_missing_corpus_dir(tmp_path):
    with pytest.raises(UsageError):
        AcceptanceService(tmp_path / "absent", seed=0).run()


@pytest.mark.slow
def test_full_acceptance_suite(corpus_dir):
    summary = AcceptanceService(corpus_dir, seed=0).run()
    assert summary.failures == []
    assert summary.passed
    assert [c.criterion for c in summary.criteria] == list(range(11))
