# toricdeg/services/binomial_algebra.py
from __future__ import annotations

import heapq
from typing import Iterable, Optional, Sequence

from loguru import logger

from toricdeg.core.exceptions import DimensionMismatch, NotHomogeneous, NotPointed
from toricdeg.models.binomial import (
    Binomial,
    Comparison,
    GroebnerBasis,
    MinimalDegree,
    Monomial,
    TermOrder,
    Tiebreak,
    coprime,
    divides,
    mono_gcd,
    mono_lcm,
)
from toricdeg.models.lattice import GeneratorMatrix, dot
from toricdeg.services import lattice_core


def compare(order: TermOrder, m1: Monomial, m2: Monomial) -> Comparison:
    return order.compare(m1, m2)


# ---------- division ----------


def reduce_monomial(m: Monomial, G: Sequence[Binomial]) -> Monomial:
    """Rewrite x^m by lead → trail until no lead divides it."""
    while True:
        for g in G:
            if divides(g.lead, m):
                m = tuple(x - l + t for x, l, t in zip(m, g.lead, g.trail))
                break
        else:
            return m


def normal_form(
    b: Binomial | Monomial, G: Sequence[Binomial], order: TermOrder
) -> Optional[Binomial | Monomial]:
    """
    Normal form modulo G (oriented by `order`). A binomial whose two terms
    reduce to the same monomial is zero and comes back as None.
    """
    if not isinstance(b, Binomial):
        return reduce_monomial(tuple(b), G)
    lead = reduce_monomial(b.lead, G)
    trail = reduce_monomial(b.trail, G)
    if lead == trail:
        return None
    return Binomial(lead, trail).oriented(order)


def s_pair(f: Binomial, g: Binomial) -> tuple[Monomial, Monomial]:
    """The S-binomial of two oriented binomials as a pair of monomials."""
    L = mono_lcm(f.lead, g.lead)
    left = tuple(x - l + t for x, l, t in zip(L, f.lead, f.trail))
    right = tuple(x - l + t for x, l, t in zip(L, g.lead, g.trail))
    return left, right


# ---------- Buchberger ----------


class BuchbergerEngine:
    """
    Incremental Buchberger completion on pure binomials.

    Pairs are taken by the normal strategy (smallest lcm first); the coprime
    and chain criteria discard pairs. Not thread-safe: one engine per run.
    """

    def __init__(self, order: TermOrder):
        self.order = order
        self.basis: list[Binomial] = []
        self._heap: list[tuple[tuple, int, int]] = []
        self._pending: set[tuple[int, int]] = set()
        self.reductions = 0

    # ---------- Public API ----------

    def add_generator(self, g: Binomial) -> bool:
        """
        Add g as given unless it already reduces to zero; returns whether it
        was added. Generators are not rewritten, so a generating set that is
        already a basis comes back unchanged.
        """
        if g.nvars != self.order.nvars:
            raise DimensionMismatch(
                f"binomial in {g.nvars} variables for an order on {self.order.nvars}"
            )
        g = g.oriented(self.order)
        if normal_form(g, self.basis, self.order) is None:
            return False
        self._append(g)
        return True

    def complete(self) -> GroebnerBasis:
        while self._heap:
            _, i, j = heapq.heappop(self._heap)
            self._pending.discard((i, j))
            f, g = self.basis[i], self.basis[j]
            if coprime(f.lead, g.lead) or self._chain_criterion(i, j):
                continue
            left, right = s_pair(f, g)
            left = reduce_monomial(left, self.basis)
            right = reduce_monomial(right, self.basis)
            self.reductions += 1
            if left != right:
                self._append(Binomial(left, right).oriented(self.order))
        logger.debug(
            "Buchberger finished with {} elements after {} reductions",
            len(self.basis),
            self.reductions,
        )
        return GroebnerBasis(tuple(self.basis), self.order, reduced=False)

    def contains(self, g: Binomial) -> bool:
        """Ideal membership; completes the basis first."""
        self.complete()
        return normal_form(g, self.basis, self.order) is None

    # ---------- Internal helpers ----------

    def _append(self, g: Binomial) -> None:
        k = len(self.basis)
        self.basis.append(g)
        for i in range(k):
            lcm = mono_lcm(self.basis[i].lead, g.lead)
            heapq.heappush(self._heap, (self.order.key(lcm), i, k))
            self._pending.add((i, k))

    def _chain_criterion(self, i: int, j: int) -> bool:
        lcm = mono_lcm(self.basis[i].lead, self.basis[j].lead)
        for k, h in enumerate(self.basis):
            if k in (i, j) or not divides(h.lead, lcm):
                continue
            if (min(i, k), max(i, k)) in self._pending:
                continue
            if (min(j, k), max(j, k)) in self._pending:
                continue
            return True
        return False


def buchberger(
    gens: Iterable[Binomial], order: TermOrder, reduced: bool = True
) -> GroebnerBasis:
    """
    Gröbner basis of ⟨gens⟩. With `reduced=False` the result is the minimal
    basis obtained from the completed generators, in input form.
    """
    engine = BuchbergerEngine(order)
    for g in gens:
        engine.add_generator(g)
    gb = engine.complete()
    return reduce_basis(gb) if reduced else minimal_basis(gb)


def is_groebner(gens: Sequence[Binomial], order: TermOrder) -> bool:
    """Every S-pair of `gens` reduces to zero."""
    G = [g.oriented(order) for g in gens]
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            left, right = s_pair(G[i], G[j])
            if reduce_monomial(left, G) != reduce_monomial(right, G):
                return False
    return True


def _drop_redundant_leads(G: GroebnerBasis) -> list[Binomial]:
    order = G.order
    ranked = sorted(
        (g.oriented(order) for g in G.elements),
        key=lambda g: (order.key(g.lead), order.key(g.trail)),
    )
    minimal: list[Binomial] = []
    for g in ranked:
        if not any(divides(h.lead, g.lead) for h in minimal):
            minimal.append(g)
    return minimal


def minimal_basis(G: GroebnerBasis) -> GroebnerBasis:
    """Drop elements whose lead is divisible by another lead; trails untouched."""
    return GroebnerBasis(tuple(_drop_redundant_leads(G)), G.order, reduced=False)


def reduce_basis(G: GroebnerBasis) -> GroebnerBasis:
    """The unique reduced Gröbner basis of the ideal spanned by G."""
    order = G.order
    minimal = _drop_redundant_leads(G)
    out = [Binomial(g.lead, reduce_monomial(g.trail, minimal)) for g in minimal]
    out.sort(key=lambda g: order.key(g.lead))
    return GroebnerBasis(tuple(out), order, reduced=True)


def ideal_equal(
    gens1: Sequence[Binomial], gens2: Sequence[Binomial], nvars: int
) -> bool:
    order = TermOrder.plain(nvars)
    for g in (*gens1, *gens2):
        if g.nvars != nvars:
            raise DimensionMismatch(f"binomial in {g.nvars} variables, expected {nvars}")
    return buchberger(gens1, order).elements == buchberger(gens2, order).elements


# ---------- saturation ----------


def _divide_out(g: Binomial, var: int) -> Binomial:
    e = min(g.lead[var], g.trail[var])
    if not e:
        return g
    lead = tuple(x - e if k == var else x for k, x in enumerate(g.lead))
    trail = tuple(x - e if k == var else x for k, x in enumerate(g.trail))
    return Binomial(lead, trail)


def _dedupe(gens: Iterable[Binomial]) -> list[Binomial]:
    seen: set[tuple[Monomial, Monomial]] = set()
    out: list[Binomial] = []
    for g in gens:
        key = tuple(sorted((g.lead, g.trail)))
        if key not in seen:
            seen.add(key)
            out.append(g)
    return out


def saturate_variables(
    gens: Sequence[Binomial],
    nvars: int,
    grading: Optional[Sequence[int]] = None,
) -> list[Binomial]:
    """
    Generators of ⟨gens⟩ : (x_1⋯x_n)^∞.

    With a strictly positive `grading` making every generator homogeneous,
    each variable is saturated in turn through a weighted reverse-lex basis
    with that variable last. Without one, a single elimination against
    x_1⋯x_n·y − 1 is used.
    """
    current = _dedupe(gens)
    if not current:
        return []
    if grading is None:
        return _saturate_by_elimination(current, nvars)
    if len(grading) != nvars or any(x <= 0 for x in grading):
        raise ValueError("saturation grading must be strictly positive on every variable")
    for g in current:
        if dot(grading, g.lead) != dot(grading, g.trail):
            raise NotHomogeneous(f"{g} is not homogeneous for the saturation grading")

    for var in range(nvars):
        perm = tuple(k for k in range(nvars) if k != var) + (var,)
        order = TermOrder(weight=tuple(grading), tiebreak=Tiebreak.revlex, permutation=perm)
        gb = buchberger(current, order, reduced=False)
        current = _dedupe(_divide_out(g, var) for g in gb.elements)
        logger.debug("Saturated variable {}: {} generators", var, len(current))
    return current


def _saturate_by_elimination(gens: Sequence[Binomial], nvars: int) -> list[Binomial]:
    order = TermOrder(
        weight=(0,) * nvars + (1,), tiebreak=Tiebreak.degrevlex
    )
    lifted = [Binomial(g.lead + (0,), g.trail + (0,)) for g in gens]
    lifted.append(Binomial((1,) * (nvars + 1), (0,) * (nvars + 1)))
    gb = buchberger(lifted, order, reduced=True)
    out = [
        Binomial(g.lead[:-1], g.trail[:-1])
        for g in gb.elements
        if g.lead[-1] == 0 and g.trail[-1] == 0
    ]
    logger.debug("Saturated by elimination: {} generators", len(out))
    return out


# ---------- graded minimal generators ----------


def find_root(parent: dict, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def minimal_generators(
    gens: Sequence[Binomial],
    grading: GeneratorMatrix,
    order: Optional[TermOrder] = None,
) -> list[MinimalDegree]:
    """
    A minimal generating set of ⟨gens⟩ graded by deg(x_i) = a_i, with β_1
    at every degree that occurs.

    Degrees are processed by increasing height, ties by degree. In each
    degree the monomials of the given generators are split into classes
    modulo the generators already kept; the new generators chain the class
    representatives of each connected component, largest first under
    `order` (default: the grading order itself).
    """
    nvars = grading.count
    for g in gens:
        if g.nvars != nvars:
            raise DimensionMismatch(
                f"binomial in {g.nvars} variables for {nvars} grading columns"
            )
        if grading.image(g.lead) != grading.image(g.trail):
            raise NotHomogeneous(f"{g} is not homogeneous for the grading")
    pointed, functional = lattice_core.is_pointed(grading)
    if not pointed:
        raise NotPointed()
    assert functional is not None

    heights = tuple(dot(functional, col) for col in grading.columns)
    tiebreak = Tiebreak.revlex if all(h > 0 for h in heights) else Tiebreak.degrevlex
    engine = BuchbergerEngine(TermOrder(weight=heights, tiebreak=tiebreak))
    chain_order = order or engine.order

    by_degree: dict[tuple[int, ...], list[Binomial]] = {}
    for g in gens:
        by_degree.setdefault(grading.image(g.lead), []).append(g)

    out: list[MinimalDegree] = []
    for deg in sorted(by_degree, key=lambda a: (dot(functional, a), a)):
        engine.complete()
        group = by_degree[deg]
        monomials = sorted(
            {m for g in group for m in (g.lead, g.trail)}, key=chain_order.key, reverse=True
        )
        cls = {m: reduce_monomial(m, engine.basis) for m in monomials}
        parent = {c: c for c in cls.values()}
        for g in group:
            a, b = find_root(parent, cls[g.lead]), find_root(parent, cls[g.trail])
            if a != b:
                parent[a] = b

        # first monomial seen per class is its largest
        reps: dict[Monomial, Monomial] = {}
        for m in monomials:
            reps.setdefault(cls[m], m)
        components: dict[Monomial, list[Monomial]] = {}
        for c, rep in reps.items():
            components.setdefault(find_root(parent, c), []).append(rep)

        chain: list[Binomial] = []
        for members in components.values():
            members.sort(key=chain_order.key, reverse=True)
            chain.extend(Binomial(u, v) for u, v in zip(members, members[1:]))
        if not chain:
            continue
        for g in chain:
            engine.add_generator(g)
        out.append(MinimalDegree(deg, len(chain), tuple(chain)))

    logger.debug(
        "Minimal generators: {} in {} degrees", sum(m.count for m in out), len(out)
    )
    return out


def monomial_gcd(g: Binomial) -> Monomial:
    """Common variable factor of the two terms of g."""
    return mono_gcd(g.lead, g.trail)
