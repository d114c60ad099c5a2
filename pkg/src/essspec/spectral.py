"""Distance matrices and their spectral radius.

``spectral_radius`` runs power iteration from the all-ones vector and
brackets the Perron root between the Collatz-Wielandt bounds
``min_i (Dx)_i / x_i`` and ``max_i (Dx)_i / x_i``. For a nonnegative
irreducible matrix and a positive vector ``x`` these bounds always enclose
the spectral radius, so strict comparisons between two graphs can be made
by checking that the enclosures do not overlap.

``dense_eigen_oracle`` is an independent cyclic-Jacobi eigensolver for the
symmetric case, kept separate from the power iteration on purpose.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numba
import numpy as np

from .errors import InvalidArgument, NonConvergenceError, NotConnectedError, UnsupportedError
from .graphs import Digraph, Graph, bfs_distances, connected_components

DEFAULT_TOL = 1e-12
MAX_ITERATIONS = 100_000


@dataclass(frozen=True)
class DistanceMatrix:
    entries: np.ndarray  # (n, n) int64, read-only
    is_symmetric: bool

    @property
    def n(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class SpectralResult:
    lambda1: float
    perron: np.ndarray
    lower: float
    upper: float
    iterations: int
    residual: float

    @property
    def width(self) -> float:
        return self.upper - self.lower


def _frozen(entries: np.ndarray) -> np.ndarray:
    entries.setflags(write=False)
    return entries


def distance_matrix(g: Graph) -> DistanceMatrix:
    """Shortest-path distance matrix of a connected graph."""
    rows = []
    for s in range(g.n):
        row = bfs_distances(g, s)
        if None in row:
            raise NotConnectedError("graph is not connected", partition=connected_components(g))
        rows.append(row)
    return DistanceMatrix(_frozen(np.array(rows, dtype=np.int64).reshape(g.n, g.n)), True)


def directed_distance_matrix(d: Digraph) -> DistanceMatrix:
    """Directed distance matrix; entry ``(i, j)`` is the length of a shortest i->j path."""
    rows = []
    for s in range(d.n):
        row = bfs_distances(d, s)
        for t, dist in enumerate(row):
            if dist is None:
                raise NotConnectedError(f"no directed path from {s} to {t}", pair=(s, t))
        rows.append(row)
    entries = np.array(rows, dtype=np.int64).reshape(d.n, d.n)
    return DistanceMatrix(_frozen(entries), bool(np.array_equal(entries, entries.T)))


@numba.njit(cache=True, nogil=True)
def power_iteration_core(mat, tol, max_iter):
    """Power iteration with Collatz-Wielandt enclosure.

    Returns ``(x, lower, upper, iterations, converged)`` where ``x`` is the
    last iterate scaled to unit infinity norm and ``[lower, upper]`` are the
    Collatz-Wielandt bounds at ``x``.
    """
    n = mat.shape[0]
    x = np.ones(n)
    y = np.empty(n)
    lower = 0.0
    upper = 0.0
    for it in range(1, max_iter + 1):
        ymax = 0.0
        lower = np.inf
        upper = -np.inf
        for i in range(n):
            acc = 0.0
            for j in range(n):
                acc += mat[i, j] * x[j]
            y[i] = acc
            r = acc / x[i]
            if r < lower:
                lower = r
            if r > upper:
                upper = r
            if acc > ymax:
                ymax = acc
        if upper - lower <= tol * upper:
            return x, lower, upper, it, True
        if ymax == 0.0:
            return x, lower, upper, it, False
        for i in range(n):
            x[i] = y[i] / ymax
    return x, lower, upper, max_iter, False


def spectral_radius(dm: DistanceMatrix | np.ndarray, tol: float = DEFAULT_TOL,
                    max_iter: int = MAX_ITERATIONS) -> SpectralResult:
    """Perron root of a distance matrix with a certified enclosure.

    ``tol`` bounds the relative enclosure width ``(upper - lower) / upper``.
    """
    if not tol > 0:
        raise InvalidArgument(f"tol must be positive, got {tol}")
    entries = dm.entries if isinstance(dm, DistanceMatrix) else np.asarray(dm)
    mat = np.ascontiguousarray(entries, dtype=np.float64)
    x, lower, upper, iters, ok = power_iteration_core(mat, tol, max_iter)
    if not ok:
        raise NonConvergenceError(
            f"power iteration did not reach relative width {tol:g} in {iters} steps "
            f"(enclosure [{lower!r}, {upper!r}])", lower, upper, iters)
    lam = 0.5 * (lower + upper)
    perron = x / np.linalg.norm(x)
    residual = float(np.max(np.abs(mat @ perron - lam * perron)))
    return SpectralResult(float(lam), perron, float(lower), float(upper), int(iters), residual)


def graph_spectral_radius(g: Graph | Digraph, tol: float = DEFAULT_TOL) -> SpectralResult:
    dm = distance_matrix(g) if isinstance(g, Graph) else directed_distance_matrix(g)
    return spectral_radius(dm, tol)


def dense_eigen_oracle(dm: DistanceMatrix | np.ndarray, max_sweeps: int = 100) -> list[float]:
    """All eigenvalues of a symmetric distance matrix by cyclic Jacobi sweeps.

    Sweeps run until the off-diagonal Frobenius norm drops to roundoff level
    relative to the full norm. Returns eigenvalues sorted descending.
    """
    if isinstance(dm, DistanceMatrix):
        if not dm.is_symmetric:
            raise UnsupportedError("Jacobi oracle only handles symmetric matrices")
        entries = dm.entries
    else:
        entries = np.asarray(dm)
        if not np.array_equal(entries, entries.T):
            raise UnsupportedError("Jacobi oracle only handles symmetric matrices")
    a = np.array(entries, dtype=np.float64)
    n = a.shape[0]
    if n > 64:
        raise InvalidArgument(f"Jacobi oracle is limited to n <= 64, got {n}")
    total = math.sqrt(float(np.sum(a * a)))
    eps = np.finfo(float).eps
    for _ in range(max_sweeps):
        off = math.sqrt(float(np.sum(np.triu(a, 1) ** 2)) * 2.0)
        if off <= eps * total:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= eps * eps * total:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta  # theta^2 would overflow
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
    else:
        raise NonConvergenceError("Jacobi sweeps did not converge", math.nan, math.nan, max_sweeps)
    return sorted((float(v) for v in np.diag(a)), reverse=True)


def digraph_family_lambda1_closed_form(n: int, k: int, n1: int) -> float:
    """Largest root of ``x^2 - (n-2)x - n1(n-k-n1) - n + 1``.

    This is the distance spectral radius of the one-way-bridged digraph
    family built by :func:`essspec.extremal.theorem3_extremal`.
    """
    if k < 1 or not 2 <= n1 <= n - k - 2:
        raise InvalidArgument(f"need k >= 1 and 2 <= n1 <= n-k-2, got n={n}, k={k}, n1={n1}")
    disc = (n - 2) ** 2 + 4 * n1 * (n - k - n1) + 4 * n - 4
    return (n - 2 + math.sqrt(disc)) / 2
