"""Buchberger's algorithm with canonical reduced bases.

The verification style throughout the package leans on two properties of
this module: division is deterministic (divisors are tried in list order and
the leading monomial of the running remainder is always reduced first), and
`buchberger` returns the unique reduced Groebner basis, monic and sorted
ascending by leading monomial, so bases are directly comparable.  There are
no signature-based or modular shortcuts; `is_groebner_basis` rechecks every
S-pair and serves as the independent oracle for the computed bases.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import heapq

from .ring import (
    ContextMismatchError,
    Mono,
    MonomialOrder,
    Polynomial,
    REVLEX,
    VariableContext,
    format_monomial,
    mono_deg,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    unit_mono,
)

DEFAULT_PAIR_BUDGET = 100_000

_ZERO = Fraction(0)


class BudgetExhaustedError(RuntimeError):
    """Raised when a basis computation exceeds its pair-reduction budget."""

    def __init__(self, pairs_processed: int):
        super().__init__(f"GB budget exhausted after {pairs_processed} pair reductions")
        self.pairs_processed = pairs_processed


class _PairMeter:
    """Counts pair reductions performed in this process, for reporting."""

    __slots__ = ("count",)

    def __init__(self):
        self.count = 0


_METER = _PairMeter()


def pair_meter_reset() -> None:
    _METER.count = 0


def pair_meter_total() -> int:
    return _METER.count


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Ideal:
    """A finitely generated ideal, given by nonzero generators in one context."""

    context: VariableContext
    generators: tuple[Polynomial, ...]

    def __post_init__(self):
        if not self.generators:
            raise ValueError("an ideal needs at least one generator")
        for g in self.generators:
            if g.context != self.context:
                raise ContextMismatchError("incompatible contexts")
            if g.is_zero:
                raise ValueError("zero generators are not allowed")

    @classmethod
    def of(cls, context: VariableContext, generators) -> "Ideal":
        return cls(context, tuple(generators))

    def normalized(self) -> "Ideal":
        """Drops duplicate generators, keeping first occurrences."""
        return Ideal(self.context, tuple(dict.fromkeys(self.generators)))


@dataclass(frozen=True)
class ReducedGroebnerBasis:
    source: Ideal
    order: MonomialOrder
    elements: tuple[Polynomial, ...]
    pairs_processed: int = field(compare=False, default=0)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


# ---------------------------------------------------------------------------
# division and S-polynomials
# ---------------------------------------------------------------------------


def _leading(p: Polynomial, order: MonomialOrder):
    t = p.leading_term(order)
    return t.monomial, t.coefficient


def normal_form(p: Polynomial, basis, order: MonomialOrder = REVLEX) -> Polynomial:
    """Remainder of p under multivariate division by the listed polynomials."""
    reducers = []
    for g in basis:
        if g.context != p.context:
            raise ContextMismatchError("incompatible contexts")
        if g.is_zero:
            raise ValueError("zero divisors are not allowed in a basis")
        reducers.append((*_leading(g, order), g.terms))
    key = order.sort_key
    work = dict(p.terms)
    remainder: dict = {}
    while work:
        lm = max(work, key=key)
        c = work[lm]
        for gm, gc, gterms in reducers:
            if mono_divides(gm, lm):
                quot = mono_div(lm, gm)
                factor = c / gc
                for m2, c2 in gterms:
                    mm = mono_mul(m2, quot)
                    v = work.get(mm, _ZERO) - factor * c2
                    if v:
                        work[mm] = v
                    else:
                        work.pop(mm, None)
                break
        else:
            remainder[lm] = c
            del work[lm]
    return Polynomial.from_dict(p.context, remainder)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = REVLEX) -> Polynomial:
    """S(f, g) = (L / lt f) f - (L / lt g) g with L = lcm of the leading monomials."""
    if f.context != g.context:
        raise ContextMismatchError("incompatible contexts")
    fm, fc = _leading(f, order)
    gm, gc = _leading(g, order)
    lcm = mono_lcm(fm, gm)
    left = f.times_term(1 / fc, mono_div(lcm, fm))
    right = g.times_term(1 / gc, mono_div(lcm, gm))
    return left - right


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------

_GB_CACHE: dict = {}


def basis_cache_clear() -> None:
    """Forgets memoized bases; pair counts then restart from the inputs."""
    _GB_CACHE.clear()


def buchberger(
    ideal: Ideal,
    order: MonomialOrder = REVLEX,
    *,
    budget: int | None = None,
    use_coprime_criterion: bool = True,
) -> ReducedGroebnerBasis:
    """The reduced Groebner basis of `ideal` under `order`.

    Pairs are handled in the normal strategy (smallest lcm first).  When the
    leading monomials of a pair are coprime the S-polynomial reduces to zero,
    so such pairs are skipped unless the criterion is disabled; either way
    the canonical result is identical.  `budget` caps the number of pair
    reductions (default 100,000) and overruns raise BudgetExhaustedError.
    """
    cache_key = None
    if budget is None:
        cache_key = (ideal.context, ideal.generators, order, use_coprime_criterion)
        hit = _GB_CACHE.get(cache_key)
        if hit is not None:
            return hit
    limit = DEFAULT_PAIR_BUDGET if budget is None else budget

    basis: list[Polynomial] = []
    leads: list[tuple[Mono, Fraction]] = []
    for g in dict.fromkeys(ideal.generators):
        basis.append(g.monic(order))
        leads.append(_leading(basis[-1], order))

    key = order.sort_key
    heap: list = []

    def push_pairs(j: int):
        for i in range(j):
            lcm = mono_lcm(leads[i][0], leads[j][0])
            heapq.heappush(heap, (key(lcm), i, j, lcm))

    for j in range(len(basis)):
        push_pairs(j)

    pairs_done = 0
    unit = None
    while heap:
        _, i, j, lcm = heapq.heappop(heap)
        if use_coprime_criterion and lcm == mono_mul(leads[i][0], leads[j][0]):
            continue
        if pairs_done >= limit:
            raise BudgetExhaustedError(pairs_done)
        pairs_done += 1
        _METER.count += 1
        s = s_polynomial(basis[i], basis[j], order)
        h = normal_form(s, basis, order)
        if h.is_zero:
            continue
        h = h.monic(order)
        if h.constant_value() is not None:
            unit = h
            break
        basis.append(h)
        leads.append(_leading(h, order))
        push_pairs(len(basis) - 1)

    if unit is not None:
        elements = (Polynomial.one(ideal.context),)
    else:
        elements = tuple(_reduce_basis(basis, order))
    result = ReducedGroebnerBasis(ideal, order, elements, pairs_done)
    if cache_key is not None:
        _GB_CACHE[cache_key] = result
    return result


def _reduce_basis(polys, order: MonomialOrder):
    """Minimalizes by leading monomial, then tail-reduces until stable."""
    key = order.sort_key
    polys = sorted((p.monic(order) for p in polys), key=lambda p: key(p.leading_monomial(order)))
    minimal: list[Polynomial] = []
    kept_lms: list[Mono] = []
    for p in polys:
        lm = p.leading_monomial(order)
        if any(mono_divides(m, lm) for m in kept_lms):
            continue
        minimal.append(p)
        kept_lms.append(lm)
    changed = True
    while changed:
        changed = False
        for idx in range(len(minimal)):
            others = minimal[:idx] + minimal[idx + 1 :]
            reduced = normal_form(minimal[idx], others, order) if others else minimal[idx]
            if reduced != minimal[idx]:
                minimal[idx] = reduced.monic(order)
                changed = True
    minimal.sort(key=lambda p: key(p.leading_monomial(order)))
    return minimal


def is_groebner_basis(polys, order: MonomialOrder = REVLEX) -> bool:
    """Buchberger's criterion, checked on every pair with no skips."""
    polys = list(polys)
    for p in polys:
        if p.is_zero:
            raise ValueError("zero polynomials cannot form a basis")
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            s = s_polynomial(polys[i], polys[j], order)
            if not normal_form(s, polys, order).is_zero:
                return False
    return True


# ---------------------------------------------------------------------------
# derived operations
# ---------------------------------------------------------------------------


def ideal_member(p: Polynomial, ideal: Ideal, order: MonomialOrder = REVLEX, *, budget: int | None = None) -> bool:
    if p.context != ideal.context:
        raise ContextMismatchError("incompatible contexts")
    gb = buchberger(ideal, order, budget=budget)
    return normal_form(p, gb.elements, order).is_zero


def ideals_equal(a: Ideal, b: Ideal, order: MonomialOrder = REVLEX, *, budget: int | None = None) -> bool:
    """Equality of ideals, decided by comparing canonical reduced bases."""
    if a.context != b.context:
        raise ContextMismatchError("incompatible contexts")
    ga = buchberger(a, order, budget=budget)
    gb = buchberger(b, order, budget=budget)
    return ga.elements == gb.elements


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal held by its minimal generating monomials, sorted."""

    context: VariableContext
    generators: tuple[Mono, ...]

    def __post_init__(self):
        if not self.generators:
            raise ValueError("a monomial ideal needs at least one generator")
        width = self.context.total_count
        for m in self.generators:
            if len(m) != width:
                raise ContextMismatchError("incompatible contexts")

    @classmethod
    def from_monomials(cls, context: VariableContext, monos) -> "MonomialIdeal":
        ordered = sorted(set(tuple(m) for m in monos), key=lambda m: (mono_deg(m), m))
        minimal = []
        for m in ordered:
            if not any(mono_divides(g, m) for g in minimal):
                minimal.append(m)
        return cls(context, tuple(minimal))

    @property
    def is_proper(self) -> bool:
        return self.generators != (unit_mono(self.context.total_count),)

    def contains(self, mono: Mono) -> bool:
        return any(mono_divides(g, mono) for g in self.generators)

    def generator_strings(self) -> list[str]:
        return [format_monomial(self.context, m) or "1" for m in self.generators]

    def __str__(self) -> str:
        return "(" + ", ".join(self.generator_strings()) + ")"


def initial_ideal(ideal: Ideal, order: MonomialOrder = REVLEX, *, budget: int | None = None) -> MonomialIdeal:
    """The ideal of leading monomials, as a minimal monomial generating set."""
    gb = buchberger(ideal, order, budget=budget)
    return MonomialIdeal.from_monomials(
        ideal.context, (g.leading_monomial(order) for g in gb.elements)
    )
