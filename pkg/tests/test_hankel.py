"""Edge ideals, structured primes, verification reports, theorem sweeps."""

import itertools
import pickle
import random

import pytest

from hankelideals import (
    Ideal,
    LabeledGraph,
    Polynomial,
    REVLEX,
    StructuredPrime,
    UncoveredClassError,
    VariableContext,
    classify_labeling,
    complete_graph,
    complete_graph_minus_long_edge,
    cycle_graph,
    figure1_graph,
    figure2_graph,
    figure3_graph,
    figure4_tree,
    format_polynomial,
    hankel_edge_ideal,
    hankel_generator,
    height,
    ideal_member,
    ideals_equal,
    initial_ideal,
    is_minimal_generating_set,
    minimal_prime_candidates,
    monomial_is_complete_intersection,
    parse_polynomial,
    path_graph,
    path_plus_chord,
    property_report,
    rational_curve_ideal,
    rational_curve_prime,
    t1_path,
    t2_path,
    verify_minimal_primes,
    verify_theorem,
)
from hankelideals.hankel import (
    TheoremInstance,
    expected_t1_initial,
    expected_t2_initial,
    run_instance,
    theorem_instances,
)
from oracles import connected_graph_classes

HAMILTONIAN_FIXTURES = [cycle_graph(n) for n in (3, 4, 5, 6)] + [
    complete_graph(n) for n in (3, 4, 5)
] + [figure1_graph()]

SEMI_FIXTURES = [path_graph(n) for n in (2, 3, 4, 5, 6)] + [
    complete_graph_minus_long_edge(n) for n in (3, 4, 5)
] + [figure2_graph(), figure3_graph()]


# -- generators -----------------------------------------------------------------


def test_generator_formula():
    ctx = VariableContext(6)
    assert format_polynomial(hankel_generator(ctx, 1, 2)) == "x1*x3 - x2^2"
    assert format_polynomial(hankel_generator(ctx, 2, 5)) == "x2*x6 - x3*x5"
    with pytest.raises(ValueError):
        hankel_generator(ctx, 2, 2)
    with pytest.raises(ValueError):
        hankel_generator(ctx, 0, 3)
    with pytest.raises(ValueError):
        hankel_generator(ctx, 1, 6)  # only n = 5 columns here


def test_edge_ideal_structure():
    hank = hankel_edge_ideal(path_graph(3))
    assert [format_polynomial(g) for g in hank.ideal.generators] == [
        "x1*x3 - x2^2",
        "x2*x4 - x3^2",
    ]
    assert hank.generator_for(2, 3) == hank.ideal.generators[1]
    with pytest.raises(KeyError):
        hank.generator_for(1, 3)


def test_edgeless_graph_rejected():
    with pytest.raises(ValueError, match="edgeless"):
        hankel_edge_ideal(LabeledGraph.of(3, []))


def test_curve_ideal_is_all_minors():
    curve = rational_curve_ideal(4)
    assert len(curve.generators) == 6
    assert ideals_equal(curve, hankel_edge_ideal(complete_graph(4)).ideal)


def test_every_edge_generator_lies_in_the_curve_ideal():
    for graph in HAMILTONIAN_FIXTURES + SEMI_FIXTURES:
        curve = rational_curve_ideal(graph.n)
        for g in hankel_edge_ideal(graph).ideal.generators:
            assert ideal_member(g, curve)


# -- structured primes --------------------------------------------------------------


def test_structured_prime_validation():
    with pytest.raises(ValueError):
        StructuredPrime(frozenset(), None)
    with pytest.raises(ValueError):
        StructuredPrime(frozenset({3}), (3, 5))  # x3 sits inside the minor block
    with pytest.raises(ValueError):
        StructuredPrime(frozenset({6}), (3, 5))  # minors use x3..x6
    with pytest.raises(ValueError):
        StructuredPrime(frozenset({1}), (4, 4))


def test_structured_prime_expansion():
    ctx = VariableContext(6)
    prime = StructuredPrime(frozenset({1, 2}), (3, 5))
    ideal = prime.expand(ctx)
    strings = [format_polynomial(g) for g in ideal.generators]
    assert strings[:2] == ["x1", "x2"]
    assert "x3*x5 - x4^2" in strings
    assert len(strings) == 2 + 3
    assert prime.describe() == "(x1, x2) + minors(3..5)"
    with pytest.raises(ValueError):
        prime.expand(VariableContext(5))  # minors need x6


def test_curve_prime_describe():
    assert rational_curve_prime(5).describe() == "minors(1..5)"


# -- candidate lists -------------------------------------------------------------------


def test_candidates_for_hamiltonian_and_semi():
    assert minimal_prime_candidates(cycle_graph(5)) == (rational_curve_prime(5),)
    semi = minimal_prime_candidates(path_graph(5))
    assert semi == (
        rational_curve_prime(5),
        StructuredPrime(frozenset({2, 3, 4, 5}), None),
    )


def test_candidates_for_first_path_shape():
    # the n = 3 and n = 4 lists shed candidates that stop containing the ideal
    assert [c.describe() for c in minimal_prime_candidates(t1_path(3))] == [
        "minors(1..3)",
        "(x1, x2)",
    ]
    assert [c.describe() for c in minimal_prime_candidates(t1_path(4))] == [
        "minors(1..4)",
        "(x2, x3, x4)",
        "(x1, x2) + minors(3..4)",
    ]
    assert [c.describe() for c in minimal_prime_candidates(t1_path(6))] == [
        "minors(1..6)",
        "(x1, x2, x4, x5, x6)",
        "(x2, x3, x4, x5, x6)",
        "(x1, x2) + minors(3..6)",
    ]


def test_candidates_for_second_path_shape():
    assert [c.describe() for c in minimal_prime_candidates(t2_path(4))] == [
        "minors(1..4)",
        "(x1, x2, x4)",
        "(x2, x3, x4)",
        "(x1, x2, x3)",
    ]
    assert [c.describe() for c in minimal_prime_candidates(t2_path(5))] == [
        "minors(1..5)",
        "(x1, x2, x4, x5)",
        "(x2, x3, x4, x5)",
        "(x1, x2, x3) + minors(4..5)",
    ]
    assert [c.describe() for c in minimal_prime_candidates(t2_path(6))] == [
        "minors(1..6)",
        "(x1, x2, x4, x5, x6)",
        "(x2, x3, x4, x5, x6)",
        "(x1, x2, x3) + minors(4..6)",
        "(x1, x2, x3, x5, x6)",
    ]


def test_uncovered_class_raises():
    with pytest.raises(UncoveredClassError):
        minimal_prime_candidates(figure4_tree())
    with pytest.raises(UncoveredClassError):
        minimal_prime_candidates(LabeledGraph.of(4, [(1, 3), (3, 2), (2, 4)]))


def test_curve_prime_always_among_candidates():
    for graph in HAMILTONIAN_FIXTURES + SEMI_FIXTURES + [t1_path(4), t2_path(5)]:
        cands = minimal_prime_candidates(graph)
        assert rational_curve_prime(graph.n) in cands


# -- verification of candidate lists --------------------------------------------------------


def test_verify_minimal_primes_on_small_fixtures():
    for graph in [cycle_graph(4), complete_graph(4), path_graph(4), t1_path(4), t2_path(4)]:
        hank = hankel_edge_ideal(graph)
        report = verify_minimal_primes(hank, minimal_prime_candidates(graph))
        assert report.verified, graph
        assert all(report.contains_ideal) and all(report.incomparable)
        assert report.intersection_is_radical
        # the certified intersection is exactly the radical, so the edge
        # ideal sits inside it
        for g in hank.ideal.generators:
            assert ideal_member(g, report.intersection)


def test_verify_rejects_wrong_candidates():
    hank = hankel_edge_ideal(cycle_graph(4))
    wrong = [StructuredPrime(frozenset({2, 3, 4}), None)]
    report = verify_minimal_primes(hank, wrong)
    assert not report.verified
    assert report.contains_ideal == (False,)


def test_verify_flags_comparable_candidates():
    hank = hankel_edge_ideal(path_graph(4))
    nested = [
        StructuredPrime(frozenset({2, 3, 4}), None),
        StructuredPrime(frozenset({1, 2, 3, 4}), None),
    ]
    report = verify_minimal_primes(hank, nested)
    assert not report.verified
    assert report.incomparable == (False, False)


def test_verify_requires_candidates():
    with pytest.raises(ValueError):
        verify_minimal_primes(hankel_edge_ideal(path_graph(3)), [])


# -- property reports --------------------------------------------------------------------------


def test_property_report_requires_connected():
    with pytest.raises(ValueError):
        property_report(LabeledGraph.of(4, [(1, 2), (3, 4)]))


def test_property_report_fixture_values():
    r = property_report(figure3_graph())
    assert (r.generator_count, r.height) == (5, 4)
    assert not r.is_complete_intersection
    assert r.is_almost_complete_intersection
    assert r.is_radical is False

    r = property_report(t1_path(4))
    assert (r.generator_count, r.height) == (3, 3)
    assert r.is_complete_intersection and not r.is_almost_complete_intersection
    assert r.is_radical is False

    r = property_report(complete_graph(4))
    assert r.is_radical is True

    r = property_report(figure4_tree(), include_radical=False)
    assert r.is_radical is None


def test_property_report_radical_unknown_outside_covered_classes():
    r = property_report(figure4_tree())
    assert r.is_radical is None
    assert any("unknown" in note for note in r.checks)


def test_mu_equals_edge_count_with_minimality():
    for graph in HAMILTONIAN_FIXTURES + SEMI_FIXTURES:
        if graph.n > 6:
            continue
        hank = hankel_edge_ideal(graph)
        assert len(hank.ideal.generators) == len(graph.edges)
        assert is_minimal_generating_set(hank.ideal)


def test_hamiltonian_and_semi_heights():
    for graph in HAMILTONIAN_FIXTURES + SEMI_FIXTURES:
        if graph.n > 6:
            continue
        assert height(hankel_edge_ideal(graph).ideal) == graph.n - 1, graph


# -- the sampled classification invariants ------------------------------------------------------


def test_complete_intersection_implies_tree_sampled():
    rng = random.Random("ci-implies-tree")
    for n in (2, 3, 4, 5):
        for shape in connected_graph_classes(n):
            perms = list(itertools.permutations(range(1, n + 1)))
            sample = rng.sample(perms, min(50, len(perms)))
            seen = set()
            for perm in sample:
                mapping = dict(zip(range(1, n + 1), perm))
                graph = LabeledGraph.of(
                    n, [(mapping[i], mapping[j]) for i, j in shape.edge_list()]
                )
                if graph.edges in seen:
                    continue
                seen.add(graph.edges)
                ideal = hankel_edge_ideal(graph).ideal
                if len(graph.edges) == height(ideal):
                    assert graph.is_tree(), graph


def test_radical_exactly_for_the_two_complete_fixtures():
    for n in (3, 4, 5):
        spine = [(i, i + 1) for i in range(1, n)]
        chords = [(i, j) for i in range(1, n + 1) for j in range(i + 2, n + 1)]
        for r in range(len(chords) + 1):
            for extra in itertools.combinations(chords, r):
                graph = LabeledGraph.of(n, spine + list(extra))
                labels = classify_labeling(graph)
                assert labels.labeled_hamiltonian or labels.labeled_semi_hamiltonian
                report = property_report(graph)
                if labels.labeled_hamiltonian:
                    want = graph.edges == complete_graph(n).edges
                else:
                    want = graph.edges == complete_graph_minus_long_edge(n).edges
                assert report.is_radical == want, graph


def test_initial_ideal_ci_triple():
    for n in range(3, 8):
        assert monomial_is_complete_intersection(
            initial_ideal(hankel_edge_ideal(path_graph(n)).ideal)
        )
        assert not monomial_is_complete_intersection(expected_t1_initial(n))
        if n >= 4:
            assert not monomial_is_complete_intersection(expected_t2_initial(n))


# -- theorem sweeps ------------------------------------------------------------------------------


def test_closed_form_initial_ideals_match_computation():
    for n in (3, 5):
        got = initial_ideal(hankel_edge_ideal(t1_path(n)).ideal, REVLEX)
        assert got == expected_t1_initial(n)
    got = initial_ideal(hankel_edge_ideal(t2_path(5)).ideal, REVLEX)
    assert got == expected_t2_initial(5)


def test_theorem_tag_bounds():
    with pytest.raises(ValueError, match="unknown theorem tag"):
        verify_theorem("thm9.9", 4)
    with pytest.raises(ValueError, match="too large"):
        verify_theorem("thm2.2", 7)
    with pytest.raises(ValueError, match="below"):
        theorem_instances("cor2.7", 5, min_n=2)


def test_small_sweeps_pass():
    for tag, max_n in [("thm2.2", 3), ("cor2.3", 4), ("prop2.6", 4), ("prop3.5", 5)]:
        report = verify_theorem(tag, max_n)
        assert report.all_passed, tag
        assert report.results, tag


def test_sweep_names_are_unique():
    report = verify_theorem("thm3.2", 5)
    names = [r.name for r in report.results]
    assert len(names) == len(set(names))
    assert report.pairs_used > 0


def test_instances_are_picklable():
    for inst in theorem_instances("thm3.1", 5):
        clone = pickle.loads(pickle.dumps(inst))
        assert clone == inst
        assert run_instance(clone).passed


def test_parallel_sweep_agrees_with_sequential():
    seq = verify_theorem("prop3.5", 6)
    par = verify_theorem("prop3.5", 6, jobs=2)
    assert [(r.name, r.passed, r.detail) for r in seq.results] == [
        (r.name, r.passed, r.detail) for r in par.results
    ]


def test_sweep_detects_a_falsified_claim():
    # a deliberately wrong instance: the curve ideal alone never certifies a
    # semi-Hamiltonian graph, whose radical needs the variable prime as well
    inst = TheoremInstance("thm2.2", "broken", (path_graph(4),))
    result = run_instance(inst)
    assert result.passed  # the real candidate list is fetched internally

    hank = hankel_edge_ideal(path_graph(4))
    report = verify_minimal_primes(hank, [rational_curve_prime(4)])
    assert not report.verified
