# toricdeg/models/lattice.py
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from loguru import logger

IntVector = tuple[int, ...]


def as_vector(values: Iterable[int]) -> IntVector:
    return tuple(int(v) for v in values)


def vadd(a: Sequence[int], b: Sequence[int]) -> IntVector:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Sequence[int], b: Sequence[int]) -> IntVector:
    return tuple(x - y for x, y in zip(a, b))


def vscale(k: int, a: Sequence[int]) -> IntVector:
    return tuple(k * x for x in a)


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def unit_vector(n: int, i: int) -> IntVector:
    return tuple(1 if j == i else 0 for j in range(n))


@dataclass(frozen=True, slots=True)
class GeneratorMatrix:
    """
    The configuration A = {a_1, ..., a_n} ⊂ Z^d, stored column-wise.

    An empty configuration is allowed here (its zonotope is {0}); semigroup
    presentations insist on at least one column.
    """

    columns: tuple[IntVector, ...]
    ambient_dim: int

    def __post_init__(self) -> None:
        if self.ambient_dim < 1:
            raise ValueError("ambient dimension must be positive")
        for col in self.columns:
            if len(col) != self.ambient_dim:
                raise ValueError(
                    f"column {col} has length {len(col)}, expected {self.ambient_dim}"
                )

    @classmethod
    def from_columns(
        cls, columns: Iterable[Iterable[int]], ambient_dim: int | None = None
    ) -> "GeneratorMatrix":
        cols = tuple(as_vector(c) for c in columns)
        if ambient_dim is None:
            if not cols:
                raise ValueError("ambient_dim is required for an empty configuration")
            ambient_dim = len(cols[0])
        matrix = cls(columns=cols, ambient_dim=ambient_dim)
        if len(set(cols)) != len(cols):
            logger.warning("Generator matrix has duplicated columns: {}", cols)
        return matrix

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "GeneratorMatrix":
        return cls.from_columns(zip(*rows), ambient_dim=len(rows))

    @property
    def count(self) -> int:
        return len(self.columns)

    @property
    def rows(self) -> tuple[IntVector, ...]:
        return tuple(
            tuple(col[k] for col in self.columns) for k in range(self.ambient_dim)
        )

    def image(self, u: Sequence[int]) -> IntVector:
        """π_A(u) = Σ u_i a_i."""
        if len(u) != self.count:
            raise ValueError(f"vector of length {len(u)} for {self.count} generators")
        out = [0] * self.ambient_dim
        for ui, col in zip(u, self.columns):
            if ui:
                for k, x in enumerate(col):
                    out[k] += ui * x
        return tuple(out)


class CertificateKind(str, enum.Enum):
    membership = "membership"
    infeasible = "infeasible"


@dataclass(frozen=True, slots=True)
class RationalCertificate:
    coefficients: tuple[Fraction, ...]
    kind: CertificateKind

    def reproduces(self, A: GeneratorMatrix, z: Sequence[int]) -> bool:
        if self.kind is not CertificateKind.membership:
            return False
        if any(c < 0 for c in self.coefficients):
            return False
        total = [Fraction(0)] * A.ambient_dim
        for c, col in zip(self.coefficients, A.columns):
            for k, x in enumerate(col):
                total[k] += c * x
        return all(t == zk for t, zk in zip(total, z))
