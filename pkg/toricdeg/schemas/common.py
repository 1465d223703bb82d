# toricdeg/schemas/common.py
from __future__ import annotations

from typing import Annotated, Any, Optional, Sequence

from pydantic import BaseModel, BeforeValidator, ConfigDict, PlainSerializer

from toricdeg.models.binomial import Binomial


def _parse_int(v: Any) -> int:
    if isinstance(v, bool):
        raise ValueError("booleans are not integers")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        text = v.strip()
        digits = text[1:] if text[:1] in "+-" else text
        if not digits.isdigit():
            raise ValueError(f"{v!r} is not a decimal integer")
        return int(text)
    raise ValueError(f"expected an integer or a decimal string, got {type(v).__name__}")


# Arbitrary-precision integer, written out as a decimal string.
IntStr = Annotated[
    int,
    BeforeValidator(_parse_int),
    PlainSerializer(lambda v: str(v), return_type=str, when_used="json"),
]
Vector = list[IntStr]


class BinomialOut(BaseModel):
    model_config = ConfigDict(frozen=True)

    lead: Vector
    trail: Vector
    text: str

    @classmethod
    def from_domain(
        cls, b: Binomial, labels: Optional[Sequence[str]] = None
    ) -> "BinomialOut":
        return cls(lead=list(b.lead), trail=list(b.trail), text=b.format(labels))

    def to_domain(self) -> Binomial:
        return Binomial(tuple(self.lead), tuple(self.trail))


def binomials_out(
    gens: Sequence[Binomial], labels: Optional[Sequence[str]] = None
) -> list[BinomialOut]:
    return [BinomialOut.from_domain(g, labels) for g in gens]
