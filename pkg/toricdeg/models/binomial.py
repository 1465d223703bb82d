# toricdeg/models/binomial.py
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Sequence

from toricdeg.models.lattice import IntVector, dot

Monomial = IntVector
GradedDegree = IntVector


class Tiebreak(str, enum.Enum):
    lex = "lex"
    degrevlex = "degrevlex"
    # weight then reverse lex; only a monomial order for strictly positive weights
    revlex = "revlex"


class Comparison(str, enum.Enum):
    less = "less"
    equal = "equal"
    greater = "greater"


# ---------- monomial arithmetic ----------


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def format_monomial(m: Monomial, labels: Optional[Sequence[str]] = None) -> str:
    names = labels or [f"x{i + 1}" for i in range(len(m))]
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


# ---------- term orders ----------


@dataclass(frozen=True, slots=True)
class TermOrder:
    """
    Weight-refined order >_w: compare w·u first, break ties by `tiebreak`
    over the variables listed in `permutation` (most significant first).
    """

    weight: IntVector
    tiebreak: Tiebreak = Tiebreak.lex
    permutation: IntVector = field(default=())

    def __post_init__(self) -> None:
        n = len(self.weight)
        if any(x < 0 for x in self.weight):
            raise ValueError("term order weights must be nonnegative")
        if not self.permutation:
            object.__setattr__(self, "permutation", tuple(range(n)))
        if sorted(self.permutation) != list(range(n)):
            raise ValueError(f"{self.permutation} is not a permutation of {n} variables")
        if self.tiebreak is Tiebreak.revlex and not all(x > 0 for x in self.weight):
            raise ValueError("revlex tiebreak needs strictly positive weights")

    @classmethod
    def plain(
        cls, nvars: int, tiebreak: Tiebreak = Tiebreak.degrevlex
    ) -> "TermOrder":
        return cls(weight=(0,) * nvars, tiebreak=tiebreak)

    @property
    def nvars(self) -> int:
        return len(self.weight)

    def key(self, m: Monomial) -> tuple:
        """Sort key: a larger key is a larger monomial."""
        perm = self.permutation
        if self.tiebreak is Tiebreak.lex:
            return (dot(self.weight, m), tuple(m[p] for p in perm))
        rev = tuple(-m[p] for p in reversed(perm))
        if self.tiebreak is Tiebreak.degrevlex:
            return (dot(self.weight, m), sum(m), rev)
        return (dot(self.weight, m), rev)

    def compare(self, m1: Monomial, m2: Monomial) -> Comparison:
        if len(m1) != self.nvars or len(m2) != self.nvars:
            raise ValueError("monomial length does not match the order")
        if m1 == m2:
            return Comparison.equal
        return Comparison.greater if self.key(m1) > self.key(m2) else Comparison.less


# ---------- binomials ----------


@dataclass(frozen=True, slots=True)
class Binomial:
    """x^lead − x^trail. Common variable factors are kept as given."""

    lead: Monomial
    trail: Monomial

    def __post_init__(self) -> None:
        if len(self.lead) != len(self.trail):
            raise ValueError("lead and trail live in different rings")
        if self.lead == self.trail:
            raise ValueError("x^u − x^u is the zero binomial")
        if any(e < 0 for e in self.lead) or any(e < 0 for e in self.trail):
            raise ValueError("exponents must be nonnegative")

    @property
    def nvars(self) -> int:
        return len(self.lead)

    def oriented(self, order: TermOrder) -> "Binomial":
        if order.key(self.trail) > order.key(self.lead):
            return Binomial(self.trail, self.lead)
        return self

    def is_homogeneous(self, grading: Sequence[Sequence[int]]) -> bool:
        """`grading` lists the degree vector of each variable."""
        return graded_degree(self.lead, grading) == graded_degree(self.trail, grading)

    def format(self, labels: Optional[Sequence[str]] = None) -> str:
        return f"{format_monomial(self.lead, labels)} - {format_monomial(self.trail, labels)}"

    def __str__(self) -> str:
        return self.format()


def graded_degree(m: Monomial, grading: Sequence[Sequence[int]]) -> GradedDegree:
    if not grading:
        return ()
    dim = len(grading[0])
    out = [0] * dim
    for e, deg in zip(m, grading):
        if e:
            for k in range(dim):
                out[k] += e * deg[k]
    return tuple(out)


@dataclass(frozen=True, slots=True)
class GroebnerBasis:
    elements: tuple[Binomial, ...]
    order: TermOrder
    reduced: bool = False

    @property
    def leading_monomials(self) -> tuple[Monomial, ...]:
        return tuple(g.lead for g in self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True, slots=True)
class MinimalDegree:
    """One graded degree of a minimal generating set and β_1 at that degree."""

    degree: GradedDegree
    count: int
    generators: tuple[Binomial, ...]

    @property
    def representative(self) -> Binomial:
        return self.generators[0]
