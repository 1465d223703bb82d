from pathlib import Path

import pytest

from toricdeg.models.lattice import GeneratorMatrix
from toricdeg.services import toric_service

CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"


@pytest.fixture
def corpus_dir() -> Path:
    return CORPUS_DIR


@pytest.fixture
def make_semigroup():
    """Build S = NA from columns; bare integers are one-dimensional columns."""

    def _make(*columns):
        cols = [(c,) if isinstance(c, int) else tuple(c) for c in columns]
        return toric_service.present(GeneratorMatrix.from_columns(cols))

    return _make


@pytest.fixture
def a_of_m(make_semigroup):
    def _make(m: int):
        return make_semigroup((1, 0), (1, 1), (m, m + 1))

    return _make
