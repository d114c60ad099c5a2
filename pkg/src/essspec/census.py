"""Exhaustive enumeration of labeled connected graphs on a few vertices.

A labeled graph on ``n`` vertices is identified with an integer whose bit
``b`` says whether the ``b``-th vertex pair is an edge, pairs being listed
in graph6 order ``(0,1), (0,2), (1,2), (0,3), ...``. The census walks every
such mask, keeps the connected ones, and records for each the essential
connectivity, minimum degree and a Collatz-Wielandt enclosure of the
distance spectral radius.

The mask range is cut into fixed chunks that worker threads process with
the GIL released; chunk results are concatenated in mask order, so the
census does not depend on the number of threads.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numba
import numpy as np

from .errors import InvalidArgument
from .graphs import Graph
from .spectral import DEFAULT_TOL, MAX_ITERATIONS, power_iteration_core

DEFAULT_MAX_N = 8
CHUNK = 1 << 15


def default_threads() -> int:
    raw = os.environ.get("ESSSPEC_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def vertex_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_mask(n: int, mask: int) -> Graph:
    return Graph.from_edges(n, [p for b, p in enumerate(vertex_pairs(n)) if mask >> b & 1])


def mask_of_graph(g: Graph) -> int:
    return sum(1 << b for b, (i, j) in enumerate(vertex_pairs(g.n)) if g.has_edge(i, j))


def _pair_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    pairs = vertex_pairs(n) or [(0, 0)]
    return (np.array([p[0] for p in pairs], dtype=np.int64),
            np.array([p[1] for p in pairs], dtype=np.int64))


def _cut_masks(n: int) -> np.ndarray:
    """Vertex subsets leaving at least four vertices, ordered by size then value."""
    masks = [s for s in range(1 << n) if n - bin(s).count("1") >= 4]
    masks.sort(key=lambda s: (bin(s).count("1"), s))
    return np.array(masks, dtype=np.int64)


def _check_n(n: int, max_n: int) -> None:
    if n < 1:
        raise InvalidArgument(f"need n >= 1, got {n}")
    if n > max_n:
        raise InvalidArgument(f"n={n} exceeds the enumeration guard max_n={max_n}; raise it explicitly")


# -- jitted kernels -------------------------------------------------------


@numba.njit(cache=True, nogil=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@numba.njit(cache=True, nogil=True)
def _build_adj(n, mask, pu, pv, m):
    adj = np.zeros(n, dtype=np.int64)
    for b in range(m):
        if (mask >> b) & 1:
            adj[pu[b]] |= 1 << pv[b]
            adj[pv[b]] |= 1 << pu[b]
    return adj


@numba.njit(cache=True, nogil=True)
def _reach(adj, n, src, allowed):
    seen = np.int64(1) << src
    frontier = seen
    while frontier:
        nxt = np.int64(0)
        for v in range(n):
            if (frontier >> v) & 1:
                nxt |= adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


@numba.njit(cache=True, nogil=True)
def _nontrivial_components(adj, n, allowed):
    count = 0
    left = allowed
    while left:
        v = 0
        while not (left >> v) & 1:
            v += 1
        comp = _reach(adj, n, v, left)
        if _popcount(comp) >= 2:
            count += 1
        left &= ~comp
    return count


@numba.njit(cache=True, nogil=True)
def _essential_kappa(adj, n, cut_masks):
    full = (np.int64(1) << n) - 1
    for idx in range(cut_masks.shape[0]):
        s = cut_masks[idx]
        if _nontrivial_components(adj, n, full & ~s) >= 2:
            return _popcount(s)
    return -1


@numba.njit(cache=True, nogil=True)
def _distance_matrix(adj, n):
    dist = np.zeros((n, n))
    for s in range(n):
        seen = np.int64(1) << s
        frontier = seen
        level = 0
        while frontier:
            level += 1
            nxt = np.int64(0)
            for v in range(n):
                if (frontier >> v) & 1:
                    nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            for v in range(n):
                if (frontier >> v) & 1:
                    dist[s, v] = level
    return dist


@numba.njit(cache=True, nogil=True)
def _connected_chunk(n, lo, hi, pu, pv, out):
    m = n * (n - 1) // 2
    full = (np.int64(1) << n) - 1
    k = 0
    for mask in range(lo, hi):
        adj = _build_adj(n, mask, pu, pv, m)
        if _reach(adj, n, 0, full) == full:
            out[k] = mask
            k += 1
    return k


@numba.njit(cache=True, nogil=True)
def _census_chunk(n, lo, hi, pu, pv, cut_masks, tol, max_iter,
                  o_mask, o_kappa, o_delta, o_lower, o_upper, o_ok):
    m = n * (n - 1) // 2
    full = (np.int64(1) << n) - 1
    k = 0
    for mask in range(lo, hi):
        adj = _build_adj(n, mask, pu, pv, m)
        if _reach(adj, n, 0, full) != full:
            continue
        o_mask[k] = mask
        o_kappa[k] = _essential_kappa(adj, n, cut_masks)
        delta = n
        for v in range(n):
            d = _popcount(adj[v])
            if d < delta:
                delta = d
        o_delta[k] = delta
        x, lower, upper, iters, ok = power_iteration_core(_distance_matrix(adj, n), tol, max_iter)
        o_lower[k] = lower
        o_upper[k] = upper
        o_ok[k] = ok
        k += 1
    return k


# -- public API -----------------------------------------------------------


def _chunks(n: int) -> list[tuple[int, int]]:
    total = 1 << (n * (n - 1) // 2)
    return [(lo, min(lo + CHUNK, total)) for lo in range(0, total, CHUNK)]


def connected_masks(n: int, threads: int = 1, max_n: int = DEFAULT_MAX_N) -> np.ndarray:
    """Edge masks of all connected labeled graphs on ``n`` vertices, ascending."""
    _check_n(n, max_n)
    pu, pv = _pair_arrays(n)

    def run(bounds):
        lo, hi = bounds
        out = np.empty(hi - lo, dtype=np.int64)
        k = _connected_chunk(n, lo, hi, pu, pv, out)
        return out[:k]

    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        parts = list(pool.map(run, _chunks(n)))
    return np.concatenate(parts)


def enumerate_connected_graphs(n: int, threads: int = 1, max_n: int = DEFAULT_MAX_N) -> Iterator[Graph]:
    """Yield every connected labeled graph on ``n`` vertices exactly once."""
    for mask in connected_masks(n, threads, max_n):
        yield graph_from_mask(n, int(mask))


@dataclass(frozen=True)
class Census:
    """Per-graph invariants for all connected labeled graphs on ``n`` vertices.

    ``kappa`` is -1 where no essential cut exists.
    """

    n: int
    tol: float
    masks: np.ndarray
    kappa: np.ndarray
    delta: np.ndarray
    lower: np.ndarray
    upper: np.ndarray

    def __len__(self):
        return len(self.masks)

    def graph(self, i: int) -> Graph:
        return graph_from_mask(self.n, int(self.masks[i]))


def run_census(n: int, tol: float = DEFAULT_TOL, threads: int = 1,
               max_n: int = DEFAULT_MAX_N) -> Census:
    _check_n(n, max_n)
    pu, pv = _pair_arrays(n)
    cuts = _cut_masks(n)

    def run(bounds):
        lo, hi = bounds
        size = hi - lo
        cols = (np.empty(size, np.int64), np.empty(size, np.int8), np.empty(size, np.int8),
                np.empty(size), np.empty(size), np.empty(size, np.bool_))
        k = _census_chunk(n, lo, hi, pu, pv, cuts, tol, MAX_ITERATIONS, *cols)
        return tuple(c[:k] for c in cols)

    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        parts = list(pool.map(run, _chunks(n)))
    masks, kappa, delta, lower, upper, ok = (np.concatenate(col) for col in zip(*parts))
    if not ok.all():
        bad = int(masks[~ok][0])
        raise RuntimeError(f"power iteration did not converge for mask {bad} on n={n}")
    return Census(n, tol, masks, kappa, delta, lower, upper)


@lru_cache(maxsize=8)
def cached_census(n: int, tol: float = DEFAULT_TOL, threads: int = 1,
                  max_n: int = DEFAULT_MAX_N) -> Census:
    return run_census(n, tol, threads, max_n)
