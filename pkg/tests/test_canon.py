import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from essspec.canon import MAX_CANON_N, canonical_form, canonical_order
from essspec.errors import InvalidArgument
from essspec.extremal import theorem3_extremal
from essspec.graphs import Digraph, Graph, complete_graph
from oracles import digraphs, graphs, random_graph, to_nx, to_nx_digraph


def shuffled(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def test_examples():
    p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    forms = {canonical_form(p3.relabel(p)) for p in ([0, 1, 2], [1, 0, 2], [2, 0, 1], [0, 2, 1])}
    assert len(forms) == 1
    assert canonical_form(complete_graph(3)) != canonical_form(p3)
    a = Graph.from_edges(3, [(0, 1)])
    b = Graph.from_edges(3, [(1, 2)])
    assert canonical_form(a) == canonical_form(b)


def test_form_is_graph6_of_a_relabelling():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    h = nx.from_graph6_bytes(canonical_form(g))
    assert nx.is_isomorphic(h, to_nx(g))
    order = canonical_order(g)
    assert sorted(order) == list(range(g.n))


def test_size_guard():
    with pytest.raises(InvalidArgument):
        canonical_form(Graph.empty(MAX_CANON_N + 1))
    canonical_form(Graph.empty(MAX_CANON_N))


@settings(max_examples=200, deadline=None)
@given(graphs(1, 8), st.randoms(use_true_random=False))
def test_invariant_under_relabelling(g, rng):
    assert canonical_form(g) == canonical_form(shuffled(g, rng))


@settings(max_examples=200, deadline=None)
@given(digraphs(1, 6), st.randoms(use_true_random=False))
def test_digraph_invariant_under_relabelling(d, rng):
    assert canonical_form(d) == canonical_form(shuffled(d, rng))


@settings(max_examples=300, deadline=None)
@given(graphs(1, 7), graphs(1, 7))
def test_equal_forms_iff_isomorphic(g, h):
    same = g.n == h.n and nx.is_isomorphic(to_nx(g), to_nx(h))
    assert (canonical_form(g) == canonical_form(h)) == same


def test_isomorphism_classes_are_separated_on_seven_vertices():
    # each non-isomorphic sample must get its own form, and vice versa
    rng = random.Random(5)
    sample = [random_graph(rng, 7, rng.random()) for _ in range(300)]
    forms = [canonical_form(g) for g in sample]
    for i in range(len(sample)):
        for j in range(i + 1, min(len(sample), i + 25)):
            iso = nx.is_isomorphic(to_nx(sample[i]), to_nx(sample[j]))
            assert (forms[i] == forms[j]) == iso


def test_regular_graphs_with_many_twins_and_symmetry():
    rng = random.Random(9)
    petersen = Graph.from_edges(10, list(nx.petersen_graph().edges()))
    assert canonical_form(petersen) == canonical_form(shuffled(petersen, rng))
    c10 = Graph.from_edges(10, [(i, (i + 1) % 10) for i in range(10)])
    prism = Graph.from_edges(10, [(i, (i + 1) % 5) for i in range(5)]
                             + [(5 + i, 5 + (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)])
    assert canonical_form(c10) != canonical_form(petersen) != canonical_form(prism)
    assert canonical_form(prism) == canonical_form(shuffled(prism, rng))


def test_reverse_family_members_are_distinct_digraphs():
    a = theorem3_extremal(7, 1, 2)
    b = theorem3_extremal(7, 1, 4)
    assert canonical_form(a.reverse()) == canonical_form(b)
    assert canonical_form(a) != canonical_form(b)
    assert nx.is_isomorphic(to_nx_digraph(a.reverse()), to_nx_digraph(b))


def test_digraph_forms_decode():
    d = Digraph.from_arcs(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    assert canonical_form(d).startswith(b"&")
