"""Small simple graphs and digraphs stored as per-vertex bitsets.

Vertices are the integers ``0..n-1``. Row ``adj[u]`` of a :class:`Graph`
is an int whose bit ``v`` is set exactly when ``uv`` is an edge; the same
holds for the out-neighbour rows of a :class:`Digraph`. Both types are
immutable, so every operation below returns a fresh object.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InvalidArgument

#: Distance reported for vertices that cannot be reached from the source.
UNREACHABLE = None


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidArgument(f"graph needs at least one vertex, got n={self.n}")
        if len(self.adj) != self.n:
            raise InvalidArgument("adjacency length does not match n")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise InvalidArgument(f"row {u} has bits beyond vertex {self.n - 1}")
            if row >> u & 1:
                raise InvalidArgument(f"loop at vertex {u}")
            for v in iter_bits(row):
                if not self.adj[v] >> u & 1:
                    raise InvalidArgument(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 1:
            raise InvalidArgument(f"graph needs at least one vertex, got n={n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgument(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidArgument(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        return iter_bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def add_edge(self, u: int, v: int) -> Graph:
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise InvalidArgument(f"({u}, {v}) is not an edge")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self.n
        for u in range(self.n):
            for v in iter_bits(self.adj[u]):
                rows[perm[u]] |= 1 << perm[v]
        return Graph(self.n, tuple(rows))


@dataclass(frozen=True)
class Digraph:
    """Simple directed graph (no loops, no parallel arcs) on ``0..n-1``."""

    n: int
    out_adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidArgument(f"digraph needs at least one vertex, got n={self.n}")
        if len(self.out_adj) != self.n:
            raise InvalidArgument("adjacency length does not match n")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.out_adj):
            if row & ~full:
                raise InvalidArgument(f"row {u} has bits beyond vertex {self.n - 1}")
            if row >> u & 1:
                raise InvalidArgument(f"loop at vertex {u}")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
        if n < 1:
            raise InvalidArgument(f"digraph needs at least one vertex, got n={n}")
        rows = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgument(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidArgument(f"loop at vertex {u}")
            rows[u] |= 1 << v
        return cls(n, tuple(rows))

    @classmethod
    def from_graph(cls, g: Graph) -> Digraph:
        """Symmetric digraph with both arcs for every edge of ``g``."""
        return cls(g.n, g.adj)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_adj[u] >> v & 1)

    def successors(self, v: int) -> Iterator[int]:
        return iter_bits(self.out_adj[v])

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.out_adj[u])]

    @property
    def num_arcs(self) -> int:
        return sum(row.bit_count() for row in self.out_adj)

    def in_adj(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for u in range(self.n):
            for v in iter_bits(self.out_adj[u]):
                rows[v] |= 1 << u
        return tuple(rows)

    def reverse(self) -> Digraph:
        return Digraph(self.n, self.in_adj())

    def add_arc(self, u: int, v: int) -> Digraph:
        if u == v:
            raise InvalidArgument(f"loop at vertex {u}")
        rows = list(self.out_adj)
        rows[u] |= 1 << v
        return Digraph(self.n, tuple(rows))

    def remove_arc(self, u: int, v: int) -> Digraph:
        if not self.has_arc(u, v):
            raise InvalidArgument(f"({u}, {v}) is not an arc")
        rows = list(self.out_adj)
        rows[u] &= ~(1 << v)
        return Digraph(self.n, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> Digraph:
        rows = [0] * self.n
        for u in range(self.n):
            for v in iter_bits(self.out_adj[u]):
                rows[perm[u]] |= 1 << perm[v]
        return Digraph(self.n, tuple(rows))


@dataclass(frozen=True)
class ComponentPartition:
    """Disjoint vertex blocks covering ``0..n-1``, each stored as a bitset.

    Blocks are ordered by their smallest vertex.
    """

    blocks: tuple[int, ...]

    def sizes(self) -> list[int]:
        return [b.bit_count() for b in self.blocks]

    def as_sets(self) -> list[frozenset[int]]:
        return [frozenset(iter_bits(b)) for b in self.blocks]

    def __len__(self):
        return len(self.blocks)


def _sorted_blocks(blocks: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(blocks, key=lambda b: b & -b))


# -- constructors ---------------------------------------------------------


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidArgument(f"K_n needs n >= 1, got {n}")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def complete_digraph(n: int) -> Digraph:
    return Digraph.from_graph(complete_graph(n))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """``g1 ∪ g2``; vertices of ``g2`` are shifted up by ``g1.n``."""
    shift = g1.n
    return Graph(g1.n + g2.n, g1.adj + tuple(row << shift for row in g2.adj))


def digraph_disjoint_union(d1: Digraph, d2: Digraph) -> Digraph:
    shift = d1.n
    return Digraph(d1.n + d2.n, d1.out_adj + tuple(row << shift for row in d2.out_adj))


def join(g1: Graph, g2: Graph) -> Graph:
    """``g1 ∨ g2``: disjoint union plus every edge between the two sides."""
    n1, n2 = g1.n, g2.n
    side1 = (1 << n1) - 1
    side2 = ((1 << n2) - 1) << n1
    rows = tuple(row | side2 for row in g1.adj) + tuple((row << n1) | side1 for row in g2.adj)
    return Graph(n1 + n2, rows)


def directed_join(d1: Digraph, d2: Digraph) -> Digraph:
    """``d1 ∇ d2``: disjoint union plus both arcs between every cross pair."""
    n1, n2 = d1.n, d2.n
    side1 = (1 << n1) - 1
    side2 = ((1 << n2) - 1) << n1
    rows = tuple(row | side2 for row in d1.out_adj) + tuple((row << n1) | side1 for row in d2.out_adj)
    return Digraph(n1 + n2, rows)


def union_all(graphs: Sequence[Graph]) -> Graph:
    out = graphs[0]
    for g in graphs[1:]:
        out = disjoint_union(out, g)
    return out


# -- traversal ------------------------------------------------------------


def _rows(g: Graph | Digraph) -> tuple[int, ...]:
    return g.adj if isinstance(g, Graph) else g.out_adj


def reach(rows: Sequence[int], source: int, allowed: int) -> int:
    """Bitset of vertices reachable from ``source`` inside ``allowed``."""
    seen = 1 << source
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def components_within(g: Graph, allowed: int) -> tuple[int, ...]:
    """Connected components of the subgraph induced by the bitset ``allowed``."""
    blocks = []
    left = allowed
    while left:
        v = (left & -left).bit_length() - 1
        comp = reach(g.adj, v, allowed)
        blocks.append(comp)
        left &= ~comp
    return tuple(blocks)


def connected_components(g: Graph) -> ComponentPartition:
    return ComponentPartition(components_within(g, (1 << g.n) - 1))


def is_connected(g: Graph) -> bool:
    return reach(g.adj, 0, (1 << g.n) - 1) == (1 << g.n) - 1


def strong_components_within(rows: Sequence[int], allowed: int) -> tuple[int, ...]:
    """Strongly connected components of the digraph induced by ``allowed``.

    Iterative Tarjan; blocks come out in reverse topological order of the
    condensation and are re-sorted by smallest vertex by the caller.
    """
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    blocks: list[int] = []
    counter = 0
    for root in iter_bits(allowed):
        if root in index:
            continue
        work = [(root, iter_bits(rows[root] & allowed))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter_bits(rows[w] & allowed)))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                block = 0
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    block |= 1 << w
                    if w == v:
                        break
                blocks.append(block)
    return tuple(blocks)


def strongly_connected_components(d: Digraph) -> ComponentPartition:
    return ComponentPartition(_sorted_blocks(strong_components_within(d.out_adj, (1 << d.n) - 1)))


def is_strongly_connected(d: Digraph) -> bool:
    full = (1 << d.n) - 1
    return reach(d.out_adj, 0, full) == full and reach(d.in_adj(), 0, full) == full


def bfs_distances(g: Graph | Digraph, source: int) -> list[int | None]:
    """Unweighted shortest-path lengths from ``source``.

    Entries for unreachable vertices are :data:`UNREACHABLE` (``None``), so
    arithmetic on them fails instead of silently producing a large number.
    """
    rows = _rows(g)
    if not 0 <= source < g.n:
        raise InvalidArgument(f"source {source} out of range for n={g.n}")
    dist: list[int | None] = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in iter_bits(rows[u]):
            if dist[v] is None:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def min_degree(g: Graph) -> int:
    return min(row.bit_count() for row in g.adj)
