"""Ideal-level operations built on the Groebner layer.

Intersections go through a single auxiliary variable and a block elimination
order; radical membership uses the classical one-extra-variable trick (p lies
in the radical of I exactly when 1 lies in I + (1 - t*p)).  Dimensions of
monomial ideals are computed by the definitional independent-variable-subset
search, which is exact and fast at the scales this package targets (at most
about twenty variables).
"""

from __future__ import annotations

from itertools import combinations

from .ring import (
    ContextMismatchError,
    MonomialOrder,
    Polynomial,
    REVLEX,
    block_elim,
    extend_polynomial,
    restrict_polynomial,
)
from .groebner import (
    Ideal,
    MonomialIdeal,
    buchberger,
    ideal_member,
    initial_ideal,
)


def intersect_ideals(a: Ideal, b: Ideal, *, budget: int | None = None) -> Ideal:
    """The intersection of two ideals in a shared context.

    Computes a Groebner basis of t*a + (1 - t)*b under an order eliminating
    the fresh variable t; the t-free basis elements generate (and in fact
    form a reduced basis of) the intersection.
    """
    if a.context != b.context:
        raise ContextMismatchError("incompatible contexts")
    base = a.context
    ext = base.extended("elim")
    t = Polynomial.auxiliary(ext, len(ext.aux_roles))
    one_minus_t = Polynomial.one(ext) - t
    lifted = [t * extend_polynomial(g, ext) for g in a.generators]
    lifted += [one_minus_t * extend_polynomial(g, ext) for g in b.generators]
    gb = buchberger(Ideal.of(ext, lifted), block_elim(1), budget=budget)
    kept = [
        restrict_polynomial(p, base)
        for p in gb.elements
        if all(m[-1] == 0 for m, _ in p.terms)
    ]
    return Ideal.of(base, kept)


def radical_member(p: Polynomial, ideal: Ideal, *, budget: int | None = None) -> bool:
    """Whether p lies in the radical of the ideal."""
    if p.context != ideal.context:
        raise ContextMismatchError("incompatible contexts")
    if p.is_zero:
        return True
    ext = ideal.context.extended("radical")
    t = Polynomial.auxiliary(ext, len(ext.aux_roles))
    witness = Polynomial.one(ext) - t * extend_polynomial(p, ext)
    gens = [extend_polynomial(g, ext) for g in ideal.generators]
    gens.append(witness)
    gb = buchberger(Ideal.of(ext, gens), REVLEX, budget=budget)
    return gb.elements == (Polynomial.one(ext),)


def radicals_equal(a: Ideal, b: Ideal, *, budget: int | None = None) -> bool:
    """Whether two ideals have the same radical (generator-wise both ways)."""
    if a.context != b.context:
        raise ContextMismatchError("incompatible contexts")
    return all(radical_member(g, b, budget=budget) for g in a.generators) and all(
        radical_member(g, a, budget=budget) for g in b.generators
    )


def monomial_dim(ideal: MonomialIdeal) -> int:
    """Krull dimension of the quotient by a proper monomial ideal.

    This is the largest size of a variable subset U such that no minimal
    generator is supported inside U; subsets are searched exhaustively from
    the top size down.
    """
    if not ideal.is_proper:
        raise ValueError("unit ideal")
    count = ideal.context.total_count
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in ideal.generators]
    for size in range(count, -1, -1):
        for subset in combinations(range(count), size):
            chosen = frozenset(subset)
            if not any(s <= chosen for s in supports):
                return size
    return 0


def height(ideal: Ideal, order: MonomialOrder = REVLEX, *, budget: int | None = None) -> int:
    """Height (codimension) of a proper ideal via its initial ideal.

    Passing to leading monomials preserves the quotient dimension for any
    global order, so the height is the variable count minus the dimension of
    the initial ideal's quotient.
    """
    gb = buchberger(ideal, order, budget=budget)
    if gb.elements == (Polynomial.one(ideal.context),):
        raise ValueError("unit ideal")
    ini = MonomialIdeal.from_monomials(
        ideal.context, (g.leading_monomial(order) for g in gb.elements)
    )
    return ideal.context.total_count - monomial_dim(ini)


def is_minimal_generating_set(
    ideal: Ideal, order: MonomialOrder = REVLEX, *, budget: int | None = None
) -> bool:
    """True when no listed generator lies in the ideal of the others."""
    gens = ideal.generators
    if len(gens) == 1:
        return True
    for i, g in enumerate(gens):
        rest = Ideal.of(ideal.context, gens[:i] + gens[i + 1 :])
        if ideal_member(g, rest, order, budget=budget):
            return False
    return True


def monomial_is_complete_intersection(ideal: MonomialIdeal) -> bool:
    """A proper monomial ideal is a complete intersection exactly when its
    minimal generators have pairwise disjoint supports."""
    if not ideal.is_proper:
        raise ValueError("unit ideal")
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in ideal.generators]
    for i in range(len(supports)):
        for j in range(i + 1, len(supports)):
            if supports[i] & supports[j]:
                return False
    return True


__all__ = [
    "intersect_ideals",
    "radical_member",
    "radicals_equal",
    "monomial_dim",
    "height",
    "is_minimal_generating_set",
    "monomial_is_complete_intersection",
    "initial_ideal",
]
