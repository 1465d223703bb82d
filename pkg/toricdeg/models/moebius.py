# toricdeg/models/moebius.py
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from toricdeg.models.lattice import IntVector
from toricdeg.models.semigroup import SemigroupPresentation


@dataclass(frozen=True, slots=True)
class SubsetWitness:
    """z = Σ_{i ∈ subset} a_i + k·b; `level` is Σ_{i ∈ subset} w_i + k·d_w."""

    subset: tuple[int, ...]
    k: int
    level: Optional[int] = None


@dataclass(frozen=True, slots=True)
class MoebiusContext:
    presentation: SemigroupPresentation
    unique_betti: Optional[IntVector]
    weight: Optional[IntVector] = None
    d_w: Optional[int] = None
    degenerated: Optional[SemigroupPresentation] = None

    @property
    def has_degeneration(self) -> bool:
        return self.weight is not None and self.d_w is not None
