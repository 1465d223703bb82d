# toricdeg/schemas/moebius.py
from typing import List, Optional

from pydantic import BaseModel

from toricdeg.schemas.common import IntStr, Vector


class SubsetWitnessOut(BaseModel):
    subset: List[int]
    k: IntStr
    level: Optional[IntStr] = None


class MoebiusReport(BaseModel):
    z: Vector
    lam: Optional[IntStr] = None
    unique_betti: Optional[Vector] = None
    d_w: Optional[IntStr] = None
    brute_force: IntStr
    closed: Optional[IntStr] = None
    witnesses: List[SubsetWitnessOut] = []
    agreement: Optional[bool] = None
    # why the closed formula was not evaluated
    downgraded: Optional[str] = None
