"""Isomorphism-invariant encodings for small graphs and digraphs.

The canonical form is the lexicographically smallest adjacency encoding
over all vertex orderings, returned as the graph6 (or digraph6) string of
that ordering. The search is individualization-refinement: colour
refinement splits vertices by degree profile, then the first non-singleton
cell is branched on, one vertex at a time. Two vertices with identical
neighbourhoods (twins) are swapped by an automorphism, so only one of them
is branched on; everything else is searched exhaustively, which keeps the
result exact.
"""

from __future__ import annotations

from .errors import InvalidArgument
from .formats import write_digraph6, write_graph6
from .graphs import Digraph, Graph, iter_bits

MAX_CANON_N = 10

CanonicalForm = bytes


def _refine(colors: list[int], out_rows, in_rows) -> list[int]:
    """Colour refinement to a stable ordered partition.

    New colours are ranks of ``(old colour, out-neighbour colours,
    in-neighbour colours)`` signatures, so the cell order depends only on
    the isomorphism class and the current colouring.
    """
    n = len(colors)
    while True:
        sigs = [
            (colors[v],
             tuple(sorted(colors[w] for w in iter_bits(out_rows[v]))),
             tuple(sorted(colors[w] for w in iter_bits(in_rows[v]))))
            for v in range(n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def _encode(order: list[int], out_rows, directed: bool) -> tuple[int, ...]:
    """Adjacency bits of the graph relabelled so that ``order[i]`` becomes ``i``."""
    n = len(order)
    if directed:
        return tuple(out_rows[order[i]] >> order[j] & 1 for i in range(n) for j in range(n))
    return tuple(out_rows[order[i]] >> order[j] & 1 for j in range(1, n) for i in range(j))


def _twin_classes(cell: list[int], out_rows, in_rows) -> list[int]:
    """One representative per twin class inside ``cell``."""
    reps: list[int] = []
    for v in cell:
        for r in reps:
            mask = ~((1 << v) | (1 << r))
            if (out_rows[v] & mask == out_rows[r] & mask
                    and in_rows[v] & mask == in_rows[r] & mask
                    and (out_rows[v] >> r & 1) == (out_rows[r] >> v & 1)):
                break
        else:
            reps.append(v)
    return reps


def _canonical_order(n: int, out_rows, in_rows, directed: bool) -> list[int]:
    colors = [(out_rows[v].bit_count(), in_rows[v].bit_count()) for v in range(n)]
    ranks = {c: i for i, c in enumerate(sorted(set(colors)))}
    start = _refine([ranks[c] for c in colors], out_rows, in_rows)

    best_code: tuple[int, ...] | None = None
    best_order: list[int] = []
    stack = [start]
    while stack:
        colors = stack.pop()
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = next((cells[c] for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            order = sorted(range(n), key=colors.__getitem__)
            code = _encode(order, out_rows, directed)
            if best_code is None or code < best_code:
                best_code, best_order = code, order
            continue
        for v in _twin_classes(target, out_rows, in_rows):
            split = [(c, 0 if u == v else 1) for u, c in enumerate(colors)]
            ranks = {s: i for i, s in enumerate(sorted(set(split)))}
            stack.append(_refine([ranks[s] for s in split], out_rows, in_rows))
    return best_order


def canonical_order(g: Graph | Digraph) -> list[int]:
    """Vertex ordering whose relabelling yields :func:`canonical_form`."""
    if g.n > MAX_CANON_N:
        raise InvalidArgument(f"canonical form is limited to n <= {MAX_CANON_N}, got {g.n}")
    if isinstance(g, Graph):
        return _canonical_order(g.n, g.adj, g.adj, False)
    return _canonical_order(g.n, g.out_adj, g.in_adj(), True)


def canonical_form(g: Graph | Digraph) -> CanonicalForm:
    """graph6 / digraph6 bytes of the canonical relabelling of ``g``."""
    order = canonical_order(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    relabelled = g.relabel(perm)
    if isinstance(g, Graph):
        return write_graph6(relabelled)
    return write_digraph6(relabelled)
