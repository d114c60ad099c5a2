"""Vertex connectivity and essential connectivity with certificates.

A vertex cut ``S`` is essential when ``G - S`` has at least two
non-trivial components. In a simple graph a component is non-trivial
exactly when it has two or more vertices; for digraphs the components are
the strongly connected components of ``D - S``, and a block of size two or
more necessarily carries a pair of opposite arcs.

The essential-cut search is exhaustive: candidate cuts are tried by
increasing size and, within a size, in lexicographic order, so the
returned certificate is the lexicographically smallest minimum cut.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidArgument
from .graphs import (
    ComponentPartition,
    Digraph,
    Graph,
    _sorted_blocks,
    bits_of,
    components_within,
    is_connected,
    is_strongly_connected,
    strong_components_within,
)


@dataclass(frozen=True)
class EssentialCutCertificate:
    cut: frozenset[int]
    partition: ComponentPartition
    nontrivial_blocks: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.cut)


def _certificate(cut: tuple[int, ...], blocks: tuple[int, ...]) -> EssentialCutCertificate:
    blocks = _sorted_blocks(blocks)
    nontrivial = tuple(i for i, b in enumerate(blocks) if b.bit_count() >= 2)
    return EssentialCutCertificate(frozenset(cut), ComponentPartition(blocks), nontrivial)


def _search(n: int, split) -> EssentialCutCertificate | None:
    full = (1 << n) - 1
    # two non-trivial components need four vertices outside the cut
    for size in range(0, n - 3):
        for cut in combinations(range(n), size):
            blocks = split(full & ~bits_of(cut))
            if sum(1 for b in blocks if b.bit_count() >= 2) >= 2:
                return _certificate(cut, blocks)
    return None


def essential_connectivity(g: Graph) -> EssentialCutCertificate | None:
    """Minimum essential vertex cut of a connected graph, or ``None`` if none exists."""
    if not is_connected(g):
        raise InvalidArgument("essential connectivity is defined for connected graphs only")
    return _search(g.n, lambda allowed: components_within(g, allowed))


def digraph_essential_connectivity(d: Digraph) -> EssentialCutCertificate | None:
    """Minimum cut leaving two strong components of size >= 2, or ``None``."""
    if not is_strongly_connected(d):
        raise InvalidArgument("digraph essential connectivity needs a strongly connected digraph")
    return _search(d.n, lambda allowed: strong_components_within(d.out_adj, allowed))


def certificate_is_sound(g: Graph | Digraph, cert: EssentialCutCertificate) -> bool:
    """Recompute ``G - S`` from scratch and compare with the stored partition."""
    allowed = ((1 << g.n) - 1) & ~bits_of(cert.cut)
    if isinstance(g, Graph):
        blocks = components_within(g, allowed)
    else:
        blocks = strong_components_within(g.out_adj, allowed)
    if _sorted_blocks(blocks) != cert.partition.blocks:
        return False
    return len(blocks) >= 2 and sum(1 for b in blocks if b.bit_count() >= 2) >= 2


# -- vertex connectivity --------------------------------------------------


def _local_vertex_connectivity(g: Graph, s: int, t: int) -> int:
    """Max number of internally disjoint s-t paths (unit-capacity max flow).

    Each vertex v is split into ``2v`` (in) and ``2v + 1`` (out) joined by a
    unit arc; every edge becomes two arcs out->in of capacity 1.
    """
    cap: dict[tuple[int, int], int] = {}
    nbrs: list[set[int]] = [set() for _ in range(2 * g.n)]

    def arc(a: int, b: int) -> None:
        cap[a, b] = cap.get((a, b), 0) + 1
        cap.setdefault((b, a), 0)
        nbrs[a].add(b)
        nbrs[b].add(a)

    for v in range(g.n):
        arc(2 * v, 2 * v + 1)
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v)
        arc(2 * v + 1, 2 * u)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in nbrs[a]:
                if b not in parent and cap[a, b] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            return flow
        b = sink
        while b != source:
            a = parent[b]
            cap[a, b] -= 1
            cap[b, a] += 1
            b = a
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """κ(G) via Menger's theorem; ``n - 1`` for complete graphs, 0 if disconnected."""
    if g.n < 2 or not is_connected(g):
        return 0
    best = g.n - 1
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                best = min(best, _local_vertex_connectivity(g, u, v))
    return best


def is_vertex_cut(g: Graph, cut: frozenset[int] | set[int]) -> bool:
    allowed = ((1 << g.n) - 1) & ~bits_of(cut)
    return len(components_within(g, allowed)) >= 2
