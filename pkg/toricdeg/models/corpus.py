from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from toricdeg.models.binomial import Binomial
from toricdeg.models.lattice import IntVector
from toricdeg.models.semigroup import SemigroupPresentation


class FamilyName(str, enum.Enum):
    interval_even = "interval_even"
    interval_uniq = "interval_uniq"
    pairwise_coprime = "pairwise_coprime"
    A_of_m = "A_of_m"
    lawrence = "lawrence"


class IntervalCase(str, enum.Enum):
    """Weight regimes for the interval semigroups ⟨a, a+1, a+2⟩, a = 2q+2."""

    case1 = "1"
    case2a = "2a"
    case2b = "2b"
    case3a = "3a"
    case3b = "3b"


@dataclass(frozen=True, slots=True)
class IntervalClassification:
    case: IntervalCase
    # index where the chain of extra basis elements turns around (cases 2(a) and 3(b))
    n: Optional[int] = None
    # the turn happens at the last index the chain admits
    boundary: bool = False


@dataclass(frozen=True, slots=True)
class ExpectedFacts:
    """
    Facts a family is known to satisfy; unset fields are not asserted.

    `unique_betti_w` is |Bet(S_w)| = 1; `uniquely_presented_w` is the
    stronger statement that I_{A_w} has a unique minimal generating set.
    `groebner_basis` is the reduced basis for the order refining the weight,
    with `classification` naming its case.
    """

    minimal_generators: tuple[Binomial, ...] = ()
    betti: tuple[IntVector, ...] = ()
    betti_w: tuple[IntVector, ...] = ()
    unique_betti_w: Optional[bool] = None
    uniquely_presented_w: Optional[bool] = None
    classification: Optional[IntervalClassification] = None
    groebner_basis: tuple[Binomial, ...] = ()
    saturated_w: Optional[bool] = None
    witness: Optional[IntVector] = None
    notes: tuple[str, ...] = field(default=())


@dataclass(frozen=True, slots=True)
class FamilyInstance:
    name: FamilyName
    params: tuple[int, ...]
    presentation: SemigroupPresentation
    weight: Optional[IntVector]
    expected: ExpectedFacts
