# toricdeg/schemas/problem.py
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from toricdeg.models.binomial import Binomial
from toricdeg.models.lattice import GeneratorMatrix
from toricdeg.schemas.common import Vector


class OrderSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    tiebreak: Literal["lex", "degrevlex"] = "lex"
    permutation: Optional[List[int]] = None


class ProblemFile(BaseModel):
    """
    One configuration: `generators` lists the columns a_i; the optional
    weight, order and labels refer to the same n generators.
    """

    model_config = ConfigDict(extra="forbid")

    generators: List[Vector] = Field(min_length=1)
    weights: Optional[Vector] = None
    order: Optional[OrderSpec] = None
    labels: Optional[List[str]] = None

    @model_validator(mode="after")
    def _consistent(self) -> "ProblemFile":
        n = len(self.generators)
        dims = {len(col) for col in self.generators}
        if len(dims) != 1 or 0 in dims:
            raise ValueError("generators must be nonempty columns of one length")
        if self.weights is not None:
            if len(self.weights) != n:
                raise ValueError(f"weights has length {len(self.weights)}, expected {n}")
            if any(x < 0 for x in self.weights):
                raise ValueError("weights are nonnegative")
        if self.labels is not None and len(self.labels) != n:
            raise ValueError(f"labels has length {len(self.labels)}, expected {n}")
        if self.order and self.order.permutation is not None:
            if sorted(self.order.permutation) != list(range(n)):
                raise ValueError(f"permutation must rearrange 0..{n - 1}")
        return self

    def matrix(self) -> GeneratorMatrix:
        return GeneratorMatrix.from_columns([tuple(col) for col in self.generators])


class BinomialPair(BaseModel):
    model_config = ConfigDict(frozen=True)

    lead: Vector
    trail: Vector

    def to_domain(self) -> Binomial:
        return Binomial(tuple(self.lead), tuple(self.trail))


class CorpusExpectation(BaseModel):
    """Sidecar `<name>.expected.json`: facts the entry must reproduce; absent keys are not checked."""

    model_config = ConfigDict(extra="forbid")

    source: str
    generators: Optional[List[BinomialPair]] = None
    degenerated_generators: Optional[List[BinomialPair]] = None
    reduced_degeneration_basis: Optional[List[BinomialPair]] = None
    theorem_main: Optional[bool] = None
    betti: Optional[List[Vector]] = None
    betti_w: Optional[List[Vector]] = None
    inclusion: Optional[dict[str, List[int]]] = None
    saturated_w: Optional[bool] = None
    witness_w: Optional[Vector] = None
    uniquely_presented_w: Optional[bool] = None
