# toricdeg/schemas/toric.py
from typing import List, Optional

from pydantic import BaseModel

from toricdeg.schemas.common import BinomialOut, Vector


class ToricIdealReport(BaseModel):
    columns: List[Vector]
    pointed: bool
    functional: Optional[Vector] = None
    full_lattice: bool
    kernel_basis: List[Vector]
    generators: List[BinomialOut]
    groebner_basis: List[BinomialOut]
    tiebreak: str
    weight: Optional[Vector] = None


class TheoremMainReport(BaseModel):
    """(I_A)_t against I_{A_w}, both as reduced bases in the same canonical order."""

    weight: Vector
    degenerated_columns: List[Vector]
    tiebreak: str
    groebner_basis: List[BinomialOut]
    degenerated_generators: List[BinomialOut]
    reduced_degeneration: List[BinomialOut]
    reduced_toric_w: List[BinomialOut]
    equal: bool
    dehomogenized_generates: bool
