import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from essspec.connectivity import (
    certificate_is_sound,
    digraph_essential_connectivity,
    essential_connectivity,
    is_vertex_cut,
    vertex_connectivity,
)
from essspec.errors import InvalidArgument
from essspec.extremal import theorem1_extremal, theorem3_extremal
from essspec.graphs import (
    Digraph,
    Graph,
    complete_digraph,
    complete_graph,
    digraph_disjoint_union,
    directed_join,
    disjoint_union,
    join,
)
from oracles import connected_graphs, essential_connectivity_brute, strong_digraphs, to_nx


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


# -- vertex connectivity ----------------------------------------------------


@pytest.mark.parametrize("g, expected", [
    (complete_graph(5), 4),
    (Graph.from_edges(5, [(i, i + 1) for i in range(4)]), 1),
    (cycle(6), 2),
    (disjoint_union(complete_graph(2), complete_graph(2)), 0),
])
def test_vertex_connectivity_examples(g, expected):
    assert vertex_connectivity(g) == expected


@settings(max_examples=150, deadline=None)
@given(connected_graphs(2, 8))
def test_vertex_connectivity_matches_networkx(g):
    assert vertex_connectivity(g) == nx.node_connectivity(to_nx(g))


# -- essential connectivity -------------------------------------------------


def test_undefined_cases():
    assert essential_connectivity(complete_graph(6)) is None
    star = join(complete_graph(1), Graph.empty(5))
    assert essential_connectivity(star) is None
    assert digraph_essential_connectivity(complete_digraph(5)) is None


def test_clique_join_cut_is_the_join_clique():
    cert = essential_connectivity(theorem1_extremal(7, 2))
    assert cert.size == 2 and cert.cut == frozenset({0, 1})
    assert sorted(cert.partition.sizes()) == [2, 3]
    assert certificate_is_sound(theorem1_extremal(7, 2), cert)


def test_disconnected_input_is_rejected():
    with pytest.raises(InvalidArgument):
        essential_connectivity(disjoint_union(complete_graph(2), complete_graph(2)))
    with pytest.raises(InvalidArgument):
        digraph_essential_connectivity(Digraph.from_arcs(2, [(0, 1)]))


def test_digraph_examples():
    cert = digraph_essential_connectivity(theorem3_extremal(7, 1, 2))
    assert cert.size == 1
    two_triangles = digraph_disjoint_union(complete_digraph(3), complete_digraph(3))
    d = directed_join(complete_digraph(1), two_triangles)
    cert = digraph_essential_connectivity(d)
    assert cert.size == 1 and cert.cut == frozenset({0})


def test_ties_break_to_lexicographically_smallest_cut():
    # C_6 has many essential 2-cuts; {0, 3} is the first in lexicographic order
    cert = essential_connectivity(cycle(6))
    assert cert.cut == frozenset({0, 3})


@pytest.mark.parametrize("kappa", [1, 2, 3, 4])
def test_clique_join_family_has_requested_connectivity(kappa):
    for n in range(kappa + 4, 10):
        assert essential_connectivity(theorem1_extremal(n, kappa)).size == kappa


@settings(max_examples=150, deadline=None)
@given(connected_graphs(1, 8))
def test_essential_connectivity_matches_brute_force(g):
    cert = essential_connectivity(g)
    expected = essential_connectivity_brute(g)
    assert (cert.size if cert else None) == expected
    if cert is None:
        return
    assert certificate_is_sound(g, cert)
    assert len(cert.nontrivial_blocks) >= 2 and len(cert.partition) >= 2
    # an essential cut disconnects, so it is at least as large as a minimum cut
    assert is_vertex_cut(g, cert.cut)
    assert cert.size >= vertex_connectivity(g)


@settings(max_examples=150, deadline=None)
@given(strong_digraphs(1, 7))
def test_digraph_essential_connectivity_matches_brute_force(d):
    cert = digraph_essential_connectivity(d)
    assert (cert.size if cert else None) == essential_connectivity_brute(d)


def test_minimality_on_small_graphs():
    # no strictly smaller essential cut exists, checked directly
    for g in (cycle(7), theorem1_extremal(8, 3), join(complete_graph(2), cycle(6))):
        cert = essential_connectivity(g)
        h = to_nx(g)
        for cut in itertools.combinations(range(g.n), cert.size - 1):
            rest = h.subgraph(set(range(g.n)) - set(cut))
            assert sum(1 for c in nx.connected_components(rest) if len(c) >= 2) < 2


def test_certificate_soundness_detects_tampering():
    g = theorem1_extremal(7, 2)
    cert = essential_connectivity(g)
    forged = type(cert)(frozenset({0}), cert.partition, cert.nontrivial_blocks)
    assert not certificate_is_sound(g, forged)
