# toricdeg/services/corpus_service.py
from __future__ import annotations

from math import gcd, prod
from typing import Sequence

from toricdeg.core.exceptions import InvalidParams
from toricdeg.models.binomial import Binomial
from toricdeg.models.corpus import ExpectedFacts, FamilyInstance, FamilyName
from toricdeg.models.lattice import GeneratorMatrix, as_vector
from toricdeg.services import toric_service
from toricdeg.services.semigroup_service import expected_interval_gb, interval_semigroup


def _split_weight(params: Sequence[int], head: int, n: int) -> tuple[tuple[int, ...], tuple[int, ...] | None]:
    if len(params) == head:
        return tuple(params), None
    if len(params) == head + n:
        return tuple(params[:head]), tuple(params[head:])
    raise InvalidParams(f"expected {head} parameters, optionally followed by {n} weights")


def _interval_even(params: Sequence[int]) -> FamilyInstance:
    (q,), w = _split_weight(params, 1, 3)
    if q < 1:
        raise InvalidParams("interval_even needs q ≥ 1 (a = 2q+2 ≥ 4)")
    a = 2 * q + 2
    gens = (
        Binomial((0, 2, 0), (1, 0, 1)),
        Binomial((q + 2, 0, 0), (0, 0, q + 1)),
    )
    notes: tuple[str, ...] = ()
    cls, basis = None, ()
    if w is not None:
        cls, shape = expected_interval_gb(q, w)
        basis = tuple(shape)
        notes = (f"weight case {cls.case.value}",)
    return FamilyInstance(
        name=FamilyName.interval_even,
        params=tuple(params),
        presentation=interval_semigroup(a),
        weight=w,
        expected=ExpectedFacts(
            minimal_generators=gens,
            betti=((2 * a + 2,), ((q + 2) * a,)),
            uniquely_presented_w=True if w is not None else None,
            classification=cls,
            groebner_basis=basis,
            notes=notes,
        ),
    )


def _interval_uniq(params: Sequence[int]) -> FamilyInstance:
    (q,), w = _split_weight(params, 1, 3)
    if q < 2:
        raise InvalidParams("interval_uniq needs q ≥ 2 (a = 2q ≥ 4)")
    a = 2 * q
    unique_w = None
    if w is not None:
        if any(x < 0 for x in w):
            raise InvalidParams("weights are nonnegative")
        # coprime leading terms once y² outweighs xz
        if 2 * w[1] > w[0] + w[2]:
            unique_w = True
    return FamilyInstance(
        name=FamilyName.interval_uniq,
        params=tuple(params),
        presentation=interval_semigroup(a),
        weight=w,
        expected=ExpectedFacts(
            minimal_generators=(
                Binomial((0, 2, 0), (1, 0, 1)),
                Binomial((q + 1, 0, 0), (0, 0, q)),
            ),
            betti=((2 * a + 2,), ((q + 1) * a,)),
            uniquely_presented_w=unique_w,
        ),
    )


def _pairwise_coprime(params: Sequence[int], w: Sequence[int] | None) -> FamilyInstance:
    bs = tuple(params)
    if len(bs) < 2 or any(x < 2 for x in bs):
        raise InvalidParams("pairwise_coprime needs at least two integers ≥ 2")
    for i in range(len(bs)):
        for j in range(i + 1, len(bs)):
            if gcd(bs[i], bs[j]) != 1:
                raise InvalidParams(f"{bs[i]} and {bs[j]} are not coprime")
    b = prod(bs)
    A = GeneratorMatrix.from_columns([(b // x,) for x in bs])

    betti_w: tuple = ()
    unique_w = None
    if w is not None:
        if len(w) != len(bs) or any(x < 0 for x in w):
            raise InvalidParams(f"need {len(bs)} nonnegative weights")
        levels = sorted((x * wi for x, wi in zip(bs, w)), reverse=True)[:-1]
        betti_w = tuple(sorted({(b, lv) for lv in levels}))
        unique_w = len(betti_w) == 1
    return FamilyInstance(
        name=FamilyName.pairwise_coprime,
        params=bs,
        presentation=toric_service.present(A),
        weight=tuple(w) if w is not None else None,
        expected=ExpectedFacts(betti=((b,),), betti_w=betti_w, unique_betti_w=unique_w),
    )


def _a_of_m(params: Sequence[int]) -> FamilyInstance:
    (m,), w = _split_weight(params, 1, 3)
    if m < 1:
        raise InvalidParams("A_of_m needs m ≥ 1")
    A = GeneratorMatrix.from_columns([(1, 0), (1, 1), (m, m + 1)])
    w = w or (1, 1, 1)
    saturated = m <= 2
    notes = ()
    if not saturated and m % 2 == 1:
        r = (m - 1) // 2
        notes = (f"({m + 1},{m + 1},{r + 1}) = ({r + 1})·(2,2,1) lies in S_w",)
    return FamilyInstance(
        name=FamilyName.A_of_m,
        params=tuple(params),
        presentation=toric_service.present(A),
        weight=w,
        expected=ExpectedFacts(
            saturated_w=saturated if w == (1, 1, 1) else None,
            witness=(2, 2, 1) if not saturated and w == (1, 1, 1) else None,
            notes=notes,
        ),
    )


def _lawrence(params: Sequence[int]) -> FamilyInstance:
    if not params or any(x <= 0 for x in params):
        raise InvalidParams("lawrence takes the positive entries of a one-row configuration")
    A = GeneratorMatrix.from_columns([(x,) for x in params])
    L = toric_service.lawrence_matrix(A)
    return FamilyInstance(
        name=FamilyName.lawrence,
        params=tuple(params),
        presentation=toric_service.present(L),
        weight=None,
        expected=ExpectedFacts(uniquely_presented_w=True),
    )


def corpus_family(name: str | FamilyName, params: Sequence[int]) -> FamilyInstance:
    """
    A named family instance and the facts known about it.

    `pairwise_coprime` takes b_1..b_n; the other families take their single
    parameter, optionally followed by a weight vector.
    """
    try:
        family = FamilyName(name)
    except ValueError:
        raise InvalidParams(f"unknown family {name!r}") from None
    params = as_vector(params)
    if family is FamilyName.interval_even:
        return _interval_even(params)
    if family is FamilyName.interval_uniq:
        return _interval_uniq(params)
    if family is FamilyName.A_of_m:
        return _a_of_m(params)
    if family is FamilyName.lawrence:
        return _lawrence(params)
    return _pairwise_coprime(params, None)


def pairwise_coprime(bs: Sequence[int], w: Sequence[int] | None = None) -> FamilyInstance:
    """pairwise_coprime with its degeneration facts for the weight w."""
    return _pairwise_coprime(as_vector(bs), as_vector(w) if w is not None else None)
