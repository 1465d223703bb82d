# toricdeg/models/semigroup.py
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from toricdeg.models.lattice import GeneratorMatrix, IntVector


@dataclass(frozen=True, slots=True)
class SemigroupPresentation:
    """
    S = NA together with lattice facts computed once at construction.
    Build these through `toric_service.present`, which fills the caches.
    """

    matrix: GeneratorMatrix
    pointed: bool
    functional: Optional[IntVector]
    full_lattice: bool
    kernel_basis: tuple[IntVector, ...]

    @property
    def n(self) -> int:
        return self.matrix.count

    @property
    def d(self) -> int:
        return self.matrix.ambient_dim

    @property
    def columns(self) -> tuple[IntVector, ...]:
        return self.matrix.columns

    @property
    def grading(self) -> tuple[IntVector, ...]:
        """Degree of each variable, deg(x_i) = a_i."""
        return self.matrix.columns

    def height(self, z: IntVector) -> int:
        """Value of the pointedness functional; requires a pointed S."""
        if self.functional is None:
            raise ValueError("height is only defined on pointed semigroups")
        return sum(c * x for c, x in zip(self.functional, z))


@dataclass(frozen=True, slots=True)
class DegenerationContext:
    """(A, w, A_w); the extra variable t sits at index n of A_w."""

    base: SemigroupPresentation
    weight: IntVector
    degenerated: SemigroupPresentation

    @property
    def t_index(self) -> int:
        return self.base.n

    @property
    def matrix_w(self) -> GeneratorMatrix:
        return self.degenerated.matrix


@dataclass(frozen=True, slots=True)
class Fiber:
    degree: IntVector
    points: tuple[IntVector, ...]

    def __len__(self) -> int:
        return len(self.points)
