# toricdeg/schemas/invariants.py
from typing import List, Optional

from pydantic import BaseModel

from toricdeg.schemas.common import BinomialOut, IntStr, Vector


class DegreeCount(BaseModel):
    degree: Vector
    count: int


class BettiReport(BaseModel):
    """
    Betti elements of S read off a minimal generating set of I_A.

    uniquely_presented holds exactly when every Betti element is minimal
    and every β_1 count is 1.
    """

    betti: List[Vector]
    betti_minimal: List[Vector]
    beta1_counts: List[DegreeCount]
    uniquely_presented: bool
    generators_used: List[BinomialOut]


class SaturationReport(BaseModel):
    saturated: bool
    witness: Optional[Vector] = None
    checked_points: int
    # smallest k with k·witness ∈ S, when asked for and found
    witness_multiple: Optional[int] = None


class PointCase(BaseModel):
    point: Vector
    case: str
    delta: IntStr


class ApproximationCertificate(BaseModel):
    a: Vector
    weight: Vector
    delta: IntStr
    entries: List[PointCase]
    samples_checked: int = 0


class InclusionEntry(BaseModel):
    betti: Vector
    lambdas: List[IntStr]


class InclusionReport(BaseModel):
    weight: Vector
    entries: List[InclusionEntry]
    # Betti elements of S_w lying over no Betti element of S
    extras: List[Vector]


class MonDegCertificate(BaseModel):
    monomials_minimal: bool
    distinct_degrees: bool
    holds: bool


class UniquePresentationReport(BaseModel):
    q: int
    weight: Vector
    case: str
    n: Optional[int] = None
    boundary_flag: bool = False
    expected_basis: List[BinomialOut]
    reduced_basis: List[BinomialOut]
    leads_match: bool
    count_match: bool
    uniquely_presented: bool
    mon_deg: MonDegCertificate


class ApproximationReport(BaseModel):
    a: Vector
    certificate: Optional[ApproximationCertificate] = None


class UniquenessReport(BaseModel):
    uniquely_presented: bool
    uniquely_presented_w: Optional[bool] = None
    # the computed minimal generators already form a basis for the weight order
    minimal_is_groebner: Optional[bool] = None
    mon_deg: Optional[MonDegCertificate] = None
