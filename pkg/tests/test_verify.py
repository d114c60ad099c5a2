import json
import math

import pytest

from essspec.canon import canonical_form
from essspec.cli import dumps
from essspec.errors import InvalidArgument, PreconditionError
from essspec.extremal import theorem1_extremal
from essspec.graphs import Digraph, Graph, complete_digraph, complete_graph
from essspec.spectral import digraph_family_lambda1_closed_form
from essspec.verify import (
    balanced_profile,
    balancing_profiles,
    check_arc_monotonicity,
    check_balancing_lemma,
    check_edge_monotonicity,
    sample_essential_digraphs,
    verify_arc_lemma,
    verify_balancing_lemma,
    verify_discriminant_lemma,
    verify_edge_lemma,
    verify_theorem1,
    verify_theorem2,
    verify_theorem3_family,
)
from oracles import lambda1_numpy


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def directed_cycle(n):
    return Digraph.from_arcs(n, [(i, (i + 1) % n) for i in range(n)])


# -- exhaustive graph claims ------------------------------------------------


def test_thm1_small_case_report():
    r = verify_theorem1(6, 2)
    assert r.extremal_matches and r.uniqueness
    assert r.minimizer_canonical == r.construction_canonical
    assert r.construction_canonical == canonical_form(theorem1_extremal(6, 2)).decode()
    assert r.tied_canonical == [r.minimizer_canonical]
    enc = r.min_lambda1
    assert enc.lower <= enc.value <= enc.upper and enc.upper - enc.lower <= 1e-9 * enc.upper
    assert enc.value == pytest.approx(lambda1_numpy(theorem1_extremal(6, 2)), rel=1e-10)


def test_thm1_candidate_count_matches_census_filter():
    r = verify_theorem1(5, 1)
    from essspec.census import cached_census
    c = cached_census(5)
    assert r.candidates_examined == int((c.kappa == 1).sum())
    assert r.extremal_matches


def test_thm1_range_checks():
    with pytest.raises(InvalidArgument):
        verify_theorem1(5, 2)
    with pytest.raises(InvalidArgument):
        verify_theorem1(9, 1)


def test_thm2_examples():
    r = verify_theorem2(6, 1, 2)
    assert r.extremal_matches and r.parameters["case"] == "join"
    r = verify_theorem2(6, 2, 2)
    assert r.extremal_matches and r.parameters["case"] == "pendant"


def test_thm2_infeasible_is_flagged():
    r = verify_theorem2(6, 1, 5)
    assert "construction-infeasible" in r.flags and not r.extremal_matches


def test_thm2_minimum_degree_one_is_flagged():
    r = verify_theorem2(5, 1, 1)
    assert "delta-one-admitted" in r.flags


def test_report_serialises_with_full_precision():
    r = verify_theorem1(5, 1)
    data = json.loads(dumps(r.to_dict()))
    assert data["min_lambda1"]["value"] == r.min_lambda1.value
    assert data["extremal_matches"] is True
    assert "runtime_ms" not in r.comparable()


# -- digraph family ---------------------------------------------------------


def test_thm3_sweep_example():
    r = verify_theorem3_family(10, 2, samples=0)
    assert r.details["argmin_n1"] == [2, 6]
    assert r.min_lambda1.value == pytest.approx((8 + math.sqrt(148)) / 2, rel=1e-9)
    assert r.extremal_matches and r.uniqueness


def test_thm3_small_case_with_sampling():
    r = verify_theorem3_family(6, 1, samples=50)
    assert r.min_lambda1.value == pytest.approx(2 + math.sqrt(15), rel=1e-9)
    assert r.details["sampling"]["hits"] == 50
    assert r.details["sampling"]["violations"] == 0
    assert len(r.details["named_minimizers"]) == 2


def test_thm3_large_n_skips_canonical_forms():
    r = verify_theorem3_family(12, 3, samples=0)
    assert "canonical-form-skipped" in r.flags and r.extremal_matches


def test_sampling_is_seeded():
    a, _ = sample_essential_digraphs(6, 1, 10, seed=42)
    b, _ = sample_essential_digraphs(6, 1, 10, seed=42)
    assert [d.out_adj for d in a] == [d.out_adj for d in b]


def test_sampling_budget_exhaustion_is_partial():
    r = verify_theorem3_family(6, 2, samples=500, budget=50)
    assert "sampling-partial" in r.flags


def test_closed_form_agrees_with_report_for_all_members():
    r = verify_theorem3_family(9, 2, samples=0)
    for row in r.details["sweep"]:
        assert row["lambda1"] == pytest.approx(digraph_family_lambda1_closed_form(9, 2, row["n1"]), rel=1e-9)


# -- lemmas -----------------------------------------------------------------


def test_edge_monotonicity_examples():
    for e in cycle(4).edges():
        assert check_edge_monotonicity(cycle(4), e)
    for e in complete_graph(5).edges():
        assert check_edge_monotonicity(complete_graph(5), e)
    with pytest.raises(PreconditionError):
        check_edge_monotonicity(Graph.from_edges(3, [(0, 1), (1, 2)]), (0, 1))  # bridge
    with pytest.raises(PreconditionError):
        check_edge_monotonicity(cycle(4), (0, 2))  # not an edge


def test_arc_monotonicity_examples():
    c4 = directed_cycle(4)
    for u in range(4):
        for v in range(4):
            if u != v and not c4.has_arc(u, v):
                assert check_arc_monotonicity(c4, (u, v))
    k4_minus = complete_digraph(4).remove_arc(0, 1)
    assert check_arc_monotonicity(k4_minus, (0, 1))
    with pytest.raises(PreconditionError):
        check_arc_monotonicity(c4, (0, 1))
    with pytest.raises(PreconditionError):
        check_arc_monotonicity(Digraph.from_arcs(3, [(0, 1), (1, 2)]), (0, 2))


def test_balancing_examples():
    assert balanced_profile(1, [4, 3], 2) == [5, 2]
    assert check_balancing_lemma(1, [4, 2], 2)
    assert check_balancing_lemma(1, [4, 3], 2)
    assert check_balancing_lemma(2, [4, 2, 2], 2)
    with pytest.raises(InvalidArgument):
        check_balancing_lemma(1, [2, 4], 2)  # not descending
    with pytest.raises(InvalidArgument):
        check_balancing_lemma(1, [3, 2], 2)  # first part below 2p


def test_balancing_profiles_enumeration():
    profiles = list(balancing_profiles())
    assert profiles and all(s + sum(parts) <= 12 for s, parts in profiles)
    assert all(s <= 3 and len(parts) <= 3 for s, parts in profiles)
    assert (1, (4, 2)) in [(s, tuple(p)) for s, p in profiles]


def test_small_campaigns():
    assert verify_edge_lemma(60, seed=1).extremal_matches
    assert verify_arc_lemma(60, seed=1).extremal_matches
    assert verify_balancing_lemma(max_s=2, max_c=2, max_order=9).extremal_matches


def test_discriminant_lemma_report():
    r = verify_discriminant_lemma()
    assert r.extremal_matches
    assert verify_discriminant_lemma(12, 3).details["argmin"] == [2, 7]
