"""Hankel edge ideals of labeled graphs, with verification machinery.

Each edge {i, j} (i < j) of a labeled graph on n vertices contributes the
2-minor x_i*x_{j+1} - x_j*x_{i+1} of the generic 2 x n Hankel matrix, giving
a binomial ideal in the n + 1 variables x_1 ... x_{n+1}.  The full set of
minors (the complete graph's ideal) cuts out the rational normal curve; that
ideal is prime of height n - 1, which this module takes as an axiom and uses
as the primality certificate for structured candidates built from variables
plus a contiguous block of minors.

`verify_minimal_primes` certifies a candidate list as the exact set of
minimal primes: each candidate must contain the ideal, the candidates must be
pairwise incomparable, and their intersection must equal the radical (checked
in both directions, membership one way and radical membership the other).
`verify_theorem` packages the classification claims as named, replayable
instance sweeps.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .ring import Polynomial, REVLEX, VariableContext
from .groebner import (
    Ideal,
    MonomialIdeal,
    ideal_member,
    ideals_equal,
    initial_ideal,
    basis_cache_clear,
    pair_meter_total,
)
from .ideal_ops import (
    height,
    intersect_ideals,
    is_minimal_generating_set,
    radical_member,
    radicals_equal,
)
from .graphs import (
    LabeledGraph,
    classify_labeling,
    complete_graph,
    complete_graph_minus_long_edge,
    cycle_graph,
    figure1_graph,
    figure2_graph,
    enumerate_rooted_labelings,
    is_closed_labeling,
    path_graph,
    path_plus_chord,
    t1_path,
    t2_path,
    tree_classes,
)


class UncoveredClassError(ValueError):
    """Raised when no candidate list is known for a labeling class."""


# ---------------------------------------------------------------------------
# ideal construction
# ---------------------------------------------------------------------------


def hankel_generator(context: VariableContext, i: int, j: int) -> Polynomial:
    """The minor x_i*x_{j+1} - x_j*x_{i+1} for a pair i < j."""
    n = context.base_count - 1
    if not (1 <= i < j <= n):
        raise ValueError(f"need 1 <= i < j <= {n}, got ({i}, {j})")
    x = lambda k: Polynomial.variable(context, k)
    return x(i) * x(j + 1) - x(j) * x(i + 1)


@dataclass(frozen=True)
class HankelIdeal:
    """The edge ideal of a labeled graph, with generators indexed by edge."""

    graph: LabeledGraph
    ideal: Ideal

    def generator_for(self, i: int, j: int) -> Polynomial:
        if not self.graph.has_edge(i, j):
            raise KeyError(f"({i}, {j}) is not an edge")
        return hankel_generator(self.ideal.context, min(i, j), max(i, j))


def hankel_edge_ideal(graph: LabeledGraph) -> HankelIdeal:
    """The ideal generated by one Hankel minor per edge, in edge order."""
    if not graph.edges:
        raise ValueError("edgeless graph has no Hankel edge ideal")
    context = VariableContext(graph.n + 1)
    gens = tuple(hankel_generator(context, i, j) for i, j in graph.edge_list())
    return HankelIdeal(graph, Ideal(context, gens))


def rational_curve_ideal(n: int) -> Ideal:
    """All Hankel 2-minors on n columns: the complete graph's edge ideal."""
    return hankel_edge_ideal(complete_graph(n)).ideal


# ---------------------------------------------------------------------------
# structured prime candidates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StructuredPrime:
    """A prime given by variables plus an optional contiguous minor block.

    ``variable_part`` lists 1-based variable indices; ``minor_range`` (a, b)
    adds every minor on columns a..b, which involves variables x_a ... x_{b+1}
    and must be disjoint from the variable part.  Ideals of this shape are
    prime because the minor block is a rational normal curve ideal in its own
    variables, so primality needs no computation.
    """

    variable_part: frozenset[int]
    minor_range: tuple[int, int] | None = None

    def __post_init__(self):
        if self.minor_range is not None:
            a, b = self.minor_range
            if not 1 <= a < b:
                raise ValueError(f"bad minor range ({a}, {b})")
            block = set(range(a, b + 2))
            if block & self.variable_part:
                raise ValueError("minor block overlaps the variable part")
        if not self.variable_part and self.minor_range is None:
            raise ValueError("an empty structured prime is not allowed")

    def expand(self, context: VariableContext) -> Ideal:
        gens: list[Polynomial] = []
        for v in sorted(self.variable_part):
            if not 1 <= v <= context.base_count:
                raise ValueError(f"variable x{v} outside the context")
            gens.append(Polynomial.variable(context, v))
        if self.minor_range is not None:
            a, b = self.minor_range
            if b + 1 > context.base_count:
                raise ValueError("minor range outside the context")
            for i in range(a, b + 1):
                for j in range(i + 1, b + 1):
                    gens.append(hankel_generator(context, i, j))
        return Ideal.of(context, gens)

    def describe(self) -> str:
        parts = []
        if self.variable_part:
            parts.append("(" + ", ".join(f"x{v}" for v in sorted(self.variable_part)) + ")")
        if self.minor_range is not None:
            parts.append(f"minors({self.minor_range[0]}..{self.minor_range[1]})")
        return " + ".join(parts)


def rational_curve_prime(n: int) -> StructuredPrime:
    return StructuredPrime(frozenset(), (1, n))


def _vars_prime(indices) -> StructuredPrime:
    return StructuredPrime(frozenset(indices), None)


def minimal_prime_candidates(graph: LabeledGraph) -> tuple[StructuredPrime, ...]:
    """Candidate minimal primes for the covered labeling classes.

    Covered: Hamiltonian labelings (the curve ideal alone), semi-Hamiltonian
    labelings (curve ideal plus the variable prime (x_2 ... x_n)), and the
    two special rooted path labelings with a leaf attached at the root.
    Anything else raises UncoveredClassError.
    """
    n = graph.n
    if n >= 3 and graph.edges == t1_path(n).edges:
        return _t1_candidates(n)
    if n >= 4 and graph.edges == t2_path(n).edges:
        return _t2_candidates(n)
    labels = classify_labeling(graph)
    if labels.labeled_hamiltonian:
        return (rational_curve_prime(n),)
    if labels.labeled_semi_hamiltonian:
        return (rational_curve_prime(n), _vars_prime(range(2, n + 1)))
    raise UncoveredClassError("no candidate list known for this labeling class")


def _t1_candidates(n: int) -> tuple[StructuredPrime, ...]:
    ix = rational_curve_prime(n)
    if n == 3:
        # x1*g23 and x2*g23 lie in the ideal, so every prime over it picks up
        # either the whole curve ideal or (x1, x2); nothing else survives.
        return (ix, _vars_prime({1, 2}))
    p1 = _vars_prime({1, 2} | set(range(4, n + 1)))
    p2 = _vars_prime(range(2, n + 1))
    p3 = StructuredPrime(frozenset({1, 2}), (3, n))
    if n == 4:
        # Removing the root and its leaf leaves a single edge, whose ideal is
        # already prime; the variable prime p1 from the generic list fails to
        # contain the edge ideal at this size, so the list skips it.
        return (ix, p2, p3)
    return (ix, p1, p2, p3)


def _t2_candidates(n: int) -> tuple[StructuredPrime, ...]:
    ix = rational_curve_prime(n)
    p1 = _vars_prime({1, 2} | set(range(4, n + 1)))
    p2 = _vars_prime(range(2, n + 1))
    if n == 4:
        # minors(4..4) is empty, so the minor candidate and the variable
        # candidate coincide at (x1, x2, x3).
        return (ix, p1, p2, _vars_prime({1, 2, 3}))
    p3 = StructuredPrime(frozenset({1, 2, 3}), (4, n))
    p4 = _vars_prime({1, 2, 3} | set(range(5, n + 1)))
    if n == 5:
        # Same single-edge collapse one step deeper: p4 does not contain the
        # ideal when the trailing path has just two vertices.
        return (ix, p1, p2, p3)
    return (ix, p1, p2, p3, p4)


# ---------------------------------------------------------------------------
# verification of minimal prime lists
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MinimalPrimesReport:
    candidates: tuple[StructuredPrime, ...]
    contains_ideal: tuple[bool, ...]
    incomparable: tuple[bool, ...]
    intersection_is_radical: bool
    verified: bool
    intersection: Ideal | None = field(compare=False, default=None)


def verify_minimal_primes(
    hankel: HankelIdeal, candidates, *, budget: int | None = None
) -> MinimalPrimesReport:
    """Certifies a candidate list as exactly the minimal primes.

    The three checks together are conclusive for structurally prime
    candidates: containment pins each candidate above the ideal,
    incomparability rules out nesting, and the intersection test identifies
    the list with the radical, hence with the full set of minimal primes.
    """
    candidates = tuple(candidates)
    if not candidates:
        raise ValueError("need at least one candidate")
    context = hankel.ideal.context
    expanded = [c.expand(context) for c in candidates]
    gens = hankel.ideal.generators

    contains = tuple(
        all(ideal_member(g, prime, REVLEX, budget=budget) for g in gens)
        for prime in expanded
    )

    count = len(expanded)
    included = [[False] * count for _ in range(count)]
    for i in range(count):
        for j in range(count):
            if i != j:
                included[i][j] = all(
                    ideal_member(g, expanded[j], REVLEX, budget=budget)
                    for g in expanded[i].generators
                )
    incomparable = tuple(
        all(not included[i][j] and not included[j][i] for j in range(count) if j != i)
        for i in range(count)
    )

    meet = expanded[0]
    for prime in expanded[1:]:
        meet = intersect_ideals(meet, prime, budget=budget)
    ideal_below = all(ideal_member(g, meet, REVLEX, budget=budget) for g in gens)
    meet_in_radical = all(
        radical_member(q, hankel.ideal, budget=budget) for q in meet.generators
    )
    intersection_is_radical = ideal_below and meet_in_radical

    verified = all(contains) and all(incomparable) and intersection_is_radical
    return MinimalPrimesReport(
        candidates, contains, incomparable, intersection_is_radical, verified, meet
    )


# ---------------------------------------------------------------------------
# property reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PropertyReport:
    graph: LabeledGraph
    generator_count: int
    minimal_generators: bool
    height: int
    is_complete_intersection: bool
    is_almost_complete_intersection: bool
    is_radical: bool | None
    checks: tuple[str, ...]


def property_report(
    graph: LabeledGraph, *, budget: int | None = None, include_radical: bool = True
) -> PropertyReport:
    """Algebraic summary of a connected labeled graph's edge ideal.

    The complete-intersection flags compare the verified minimal generator
    count against the height.  Radicality is decided only when a verified
    minimal-prime list is available; otherwise it is reported as unknown
    (None).
    """
    if not graph.is_connected():
        raise ValueError("property report requires a connected graph")
    hank = hankel_edge_ideal(graph)
    mu = len(hank.ideal.generators)
    minimal = is_minimal_generating_set(hank.ideal, REVLEX, budget=budget)
    ht = height(hank.ideal, REVLEX, budget=budget)
    checks = [f"mu={mu} (minimal generating set: {minimal})", f"height={ht}"]
    is_rad: bool | None = None
    if include_radical:
        try:
            cands = minimal_prime_candidates(graph)
        except UncoveredClassError:
            cands = None
            checks.append("radical: unknown (no candidate list known)")
        if cands is not None:
            report = verify_minimal_primes(hank, cands, budget=budget)
            if report.verified:
                is_rad = ideals_equal(hank.ideal, report.intersection, REVLEX, budget=budget)
                checks.append("radical decided against the verified prime intersection")
            else:
                checks.append("radical: unknown (candidate verification failed)")
    return PropertyReport(
        graph,
        mu,
        minimal,
        ht,
        minimal and mu == ht,
        minimal and mu == ht + 1,
        is_rad,
        tuple(checks),
    )


# ---------------------------------------------------------------------------
# theorem sweeps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TheoremInstance:
    tag: str
    name: str
    payload: tuple


@dataclass(frozen=True)
class InstanceResult:
    name: str
    passed: bool
    detail: str
    pairs_used: int = field(compare=False, default=0)


@dataclass(frozen=True)
class TheoremReport:
    tag: str
    results: tuple[InstanceResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def pairs_used(self) -> int:
        return sum(r.pairs_used for r in self.results)


# Bounds keep sweeps at desk scale; anything larger is refused rather than
# left to run unboundedly.
TAG_BOUNDS = {
    "thm2.2": (2, 6),
    "cor2.3": (3, 6),
    "prop2.6": (3, 6),
    "cor2.7": (4, 8),
    "thm3.1": (3, 7),
    "thm3.2": (2, 7),
    "prop3.5": (3, 8),
    "prop2.8-radical": (4, 7),
}

TAG_SUMMARIES = {
    "thm2.2": "height n-1 and verified minimal primes for (semi-)Hamiltonian fixtures",
    "cor2.3": "complete graph gives the curve ideal; dropping {1,n} intersects in (x2..xn)",
    "prop2.6": "almost complete intersections: the cycle, and the path plus one long chord",
    "cor2.7": "among the path-plus-chord family, closed labelings are exactly span two",
    "thm3.1": "rooted labeled non-path trees have height at most n-2",
    "thm3.2": "rooted labeled trees: CI exactly for paths rooted at or next to a leaf",
    "prop3.5": "closed-form initial ideals for the two special rooted path labelings",
    "prop2.8-radical": "semi-Hamiltonian ideals share the labeled path's radical",
}


def _edge_str(graph: LabeledGraph) -> str:
    return ",".join(f"{i}-{j}" for i, j in graph.edge_list())


def _root_at_or_next_to_leaf(tree: LabeledGraph) -> bool:
    if tree.degree(1) == 1:
        return True
    return any(tree.degree(w) == 1 for w in tree.neighbors(1))


def _chord_pool(n: int) -> list[tuple[int, int]]:
    """Non-path, non-closing chords available on top of the labeled path."""
    return [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 2, n + 1)
        if (i, j) != (1, n)
    ]


def _instances_thm22(n: int) -> list[TheoremInstance]:
    graphs: list[tuple[str, LabeledGraph]] = [(f"l{n}", path_graph(n))]
    if n >= 3:
        graphs.append((f"c{n}", cycle_graph(n)))
        graphs.append((f"k{n}", complete_graph(n)))
        graphs.append((f"k{n}-e", complete_graph_minus_long_edge(n)))
    if n == 5:
        graphs.append(("fig1", figure1_graph()))
    if n == 6:
        graphs.append(("fig2", figure2_graph()))
    return [
        TheoremInstance("thm2.2", f"thm2.2 n={n} {label}", (graph,))
        for label, graph in graphs
    ]


def _check_thm22(inst: TheoremInstance, budget: int | None) -> tuple[bool, str]:
    (graph,) = inst.payload
    hank = hankel_edge_ideal(graph)
    ht = height(hank.ideal, budget=budget)
    report = verify_minimal_primes(hank, minimal_prime_candidates(graph), budget=budget)
    ok = report.verified and ht == graph.n - 1
    return ok, f"height={ht} (want {graph.n - 1}), primes verified={report.verified}"


def _instances_cor23(n: int) -> list[TheoremInstance]:
    return [
        TheoremInstance("cor2.3", f"cor2.3 n={n} complete", (n, "complete")),
        TheoremInstance("cor2.3", f"cor2.3 n={n} minus-edge", (n, "minus-edge")),
    ]


def _check_cor23(inst: TheoremInstance, budget: int | None) -> tuple[bool, str]:
    n, which = inst.payload
    if which == "complete":
        ok = ideals_equal(
            hankel_edge_ideal(complete_graph(n)).ideal, rational_curve_ideal(n), budget=budget
        )
        return ok, "edge ideal of the complete graph equals the curve ideal"
    context = VariableContext(n + 1)
    meet = intersect_ideals(
        rational_curve_ideal(n), _vars_prime(range(2, n + 1)).expand(context), budget=budget
    )
    ok = ideals_equal(
        hankel_edge_ideal(complete_graph_minus_long_edge(n)).ideal, meet, budget=budget
    )
    return ok, "dropping {1,n} intersects the curve ideal with (x2..xn)"


def _instances_prop26(n: int) -> list[TheoremInstance]:
    cases: list[tuple[str, LabeledGraph, bool]] = [
        (f"c{n}", cycle_graph(n), True),
        (f"k{n}", complete_graph(n), n == 3),
        (f"l{n}", path_graph(n), False),
    ]
    if n == 5:
        cases.append(("fig1", figure1_graph(), False))
    if n >= 4:
        cases.append((f"c{n}+chord", cycle_graph(n).with_edges([(1, 3)]), False))
        cases.append(
            (f"l{n}+two-chords", path_graph(n).with_edges([(1, 3), (2, 4)]), False)
        )
    for t in range(1, n - 1):
        for s in range(2, n - t + 1):
            cases.append((f"l{n}+{t}-{t + s}", path_plus_chord(n, t, s), True))
    return [
        TheoremInstance("prop2.6", f"prop2.6 n={n} {label}", (graph, expect))
        for label, graph, expect in cases
    ]


def _check_prop26(inst: TheoremInstance, budget: int | None) -> tuple[bool, str]:
    graph, expect = inst.payload
    report = property_report(graph, budget=budget, include_radical=False)
    got = report.is_almost_complete_intersection
    return got == expect, f"almost-CI={got} (want {expect})"


def _instances_cor27(n: int) -> list[TheoremInstance]:
    out = [TheoremInstance("cor2.7", f"cor2.7 n={n} k{n}", (complete_graph(n), None))]
    for t in range(1, n - 1):
        for s in range(2, n - t + 1):
            out.append(
                TheoremInstance(
                    "cor2.7", f"cor2.7 n={n} chord {t}-{t + s}", (path_plus_chord(n, t, s), s)
                )
            )
    return out


def _check_cor27(inst: TheoremInstance, budget: int | None) -> tuple[bool, str]:
    graph, span = inst.payload
    closed = is_closed_labeling(graph)
    report = property_report(graph, budget=budget, include_radical=False)
    aci = report.is_almost_complete_intersection
    if span is None:
        # the complete graph: closed but almost-CI only at n=3
        ok = closed and aci == (graph.n == 3)
        return ok, f"closed={closed}, almost-CI={aci}"
    ok = closed == (span == 2) and aci
    return ok, f"closed={closed} (want {span == 2}), almost-CI={aci}"


def _labeled_trees(n: int, paths: bool | None):
    """All rooted labelings of all trees on n vertices; optionally filter
    path shapes in (True) or out (False)."""
    for shape_index, shape in enumerate(tree_classes(n)):
        if paths is not None and shape.is_path_shape() != paths:
            continue
        for labeled in enumerate_rooted_labelings(shape):
            yield shape_index, labeled


def _instances_thm31(n: int) -> list[TheoremInstance]:
    return [
        TheoremInstance("thm3.1", f"thm3.1 n={n} tree {_edge_str(t)}", (t,))
        for _, t in _labeled_trees(n, paths=False)
    ]


def _check_thm31(inst: TheoremInstance, budget: int | None) -> tuple[bool, str]:
    (tree,) = inst.payload
    ht = height(hankel_edge_ideal(tree).ideal, budget=budget)
    return ht <= tree.n - 2, f"height={ht} (bound {tree.n - 2})"


def _instances_thm32(n: int) -> list[TheoremInstance]:
    return [
        TheoremInstance("thm3.2", f"thm3.2 n={n} tree {_edge_str(t)}", (t,))
        for _, t in _labeled_trees(n, paths=None)
    ]


def _check_thm32(inst: TheoremInstance, budget: int | None) -> tuple[bool, str]:
    (tree,) = inst.payload
    report = property_report(tree, budget=budget, include_radical=False)
    expect = tree.is_path_shape() and _root_at_or_next_to_leaf(tree)
    got = report.is_complete_intersection
    return got == expect, f"CI={got} (want {expect})"


def _mono(context: VariableContext, powers: dict[int, int]):
    return tuple(powers.get(v + 1, 0) for v in range(context.total_count))


def expected_t1_initial(n: int) -> MonomialIdeal:
    """Closed form for the initial ideal of the first special path labeling."""
    context = VariableContext(n + 1)
    monos = [
        _mono(context, {2: 1, 3: 1}),
        _mono(context, {1: 1, 3: 2}),
        _mono(context, {2: 2}),
    ]
    monos += [_mono(context, {i + 1: 2}) for i in range(3, n)]
    return MonomialIdeal.from_monomials(context, monos)


def expected_t2_initial(n: int) -> MonomialIdeal:
    """Closed form for the initial ideal of the second special path labeling."""
    context = VariableContext(n + 1)
    monos = [
        _mono(context, {2: 1, 3: 1}),
        _mono(context, {3: 1, 4: 1}),
        _mono(context, {1: 1, 3: 2}),
        _mono(context, {1: 1, 4: 2}),
        _mono(context, {2: 2}),
    ]
    monos += [_mono(context, {i + 1: 2}) for i in range(4, n)]
    return MonomialIdeal.from_monomials(context, monos)


def _instances_prop35(n: int) -> list[TheoremInstance]:
    out = [TheoremInstance("prop3.5", f"prop3.5 n={n} t1", (n, "t1"))]
    if n >= 4:
        out.append(TheoremInstance("prop3.5", f"prop3.5 n={n} t2", (n, "t2")))
    return out


def _check_prop35(inst: TheoremInstance, budget: int | None) -> tuple[bool, str]:
    n, which = inst.payload
    if which == "t1":
        graph, expected = t1_path(n), expected_t1_initial(n)
    else:
        graph, expected = t2_path(n), expected_t2_initial(n)
    got = initial_ideal(hankel_edge_ideal(graph).ideal, REVLEX, budget=budget)
    return got == expected, f"initial ideal {got} (want {expected})"


def _instances_prop28(n: int) -> list[TheoremInstance]:
    out = []
    if n == 6:
        out.append(
            TheoremInstance("prop2.8-radical", "prop2.8-radical n=6 fig2", (figure2_graph(),))
        )
    rng = random.Random(f"semi-hamiltonian-{n}")
    pool = _chord_pool(n)
    for k in range(5):
        size = rng.randint(1, len(pool))
        chords = sorted(rng.sample(pool, size))
        graph = path_graph(n).with_edges(chords)
        label = "+".join(f"{i}-{j}" for i, j in chords)
        out.append(
            TheoremInstance(
                "prop2.8-radical", f"prop2.8-radical n={n} sample{k} {label}", (graph,)
            )
        )
    return out


def _check_prop28(inst: TheoremInstance, budget: int | None) -> tuple[bool, str]:
    (graph,) = inst.payload
    ok = radicals_equal(
        hankel_edge_ideal(graph).ideal,
        hankel_edge_ideal(path_graph(graph.n)).ideal,
        budget=budget,
    )
    return ok, "same radical as the labeled path"


_BUILDERS = {
    "thm2.2": _instances_thm22,
    "cor2.3": _instances_cor23,
    "prop2.6": _instances_prop26,
    "cor2.7": _instances_cor27,
    "thm3.1": _instances_thm31,
    "thm3.2": _instances_thm32,
    "prop3.5": _instances_prop35,
    "prop2.8-radical": _instances_prop28,
}

_CHECKERS = {
    "thm2.2": _check_thm22,
    "cor2.3": _check_cor23,
    "prop2.6": _check_prop26,
    "cor2.7": _check_cor27,
    "thm3.1": _check_thm31,
    "thm3.2": _check_thm32,
    "prop3.5": _check_prop35,
    "prop2.8-radical": _check_prop28,
}


def theorem_instances(tag: str, max_n: int, min_n: int | None = None) -> list[TheoremInstance]:
    if tag not in _BUILDERS:
        raise ValueError(f"unknown theorem tag {tag!r}")
    lo, hi = TAG_BOUNDS[tag]
    if max_n > hi:
        raise ValueError(f"n range too large for {tag} (limit {hi})")
    start = lo if min_n is None else min_n
    if start < lo:
        raise ValueError(f"n range starts below {lo} for {tag}")
    out: list[TheoremInstance] = []
    for n in range(start, max_n + 1):
        out.extend(_BUILDERS[tag](n))
    return out


def run_instance(inst: TheoremInstance, budget: int | None = None) -> InstanceResult:
    # fresh basis cache so the pair count is a function of the instance
    # alone, not of what happened to run earlier in this process
    basis_cache_clear()
    before = pair_meter_total()
    passed, detail = _CHECKERS[inst.tag](inst, budget)
    return InstanceResult(inst.name, passed, detail, pair_meter_total() - before)


def verify_theorem(
    tag: str, max_n: int, *, min_n: int | None = None, jobs: int = 1,
    budget: int | None = None,
) -> TheoremReport:
    """Runs every instance of a tagged claim for n up to max_n.

    With jobs > 1 the instances fan out to worker processes; results are
    reassembled in instance order, and per-instance pair counts are
    placement-independent, so reports are identical either way.
    """
    instances = theorem_instances(tag, max_n, min_n)
    if jobs > 1 and len(instances) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = tuple(pool.map(run_instance, instances, [budget] * len(instances)))
    else:
        results = tuple(run_instance(inst, budget) for inst in instances)
    return TheoremReport(tag, results)
