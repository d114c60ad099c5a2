"""Extremal graphs and digraphs for minimum distance spectral radius.

Vertex layout is fixed so that certificates and encodings are
reproducible: the joining clique comes first, then the remaining blocks in
the order they appear in the construction, and the extra vertex ``z`` of
the low-minimum-degree construction comes last.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .connectivity import essential_connectivity
from .errors import ConstructionInfeasible, InvalidArgument
from .graphs import (
    Digraph,
    Graph,
    complete_digraph,
    complete_graph,
    digraph_disjoint_union,
    directed_join,
    disjoint_union,
    join,
    min_degree,
)


class Family(enum.Enum):
    THM1 = "thm1"
    THM2 = "thm2"
    THM3 = "thm3"


@dataclass(frozen=True)
class ExtremalSpec:
    family: Family
    n: int
    kappa: int
    delta: int | None = None
    n1: int | None = None

    def __post_init__(self):
        if self.family is Family.THM1:
            _check_thm1(self.n, self.kappa)
        elif self.family is Family.THM2:
            if self.delta is None:
                raise InvalidArgument("THM2 needs delta")
            _check_thm2(self.n, self.kappa, self.delta)
        else:
            if self.n1 is None:
                raise InvalidArgument("THM3 needs n1")
            _check_thm3(self.n, self.kappa, self.n1)

    def build(self) -> Graph | Digraph:
        if self.family is Family.THM1:
            return theorem1_extremal(self.n, self.kappa)
        if self.family is Family.THM2:
            return theorem2_extremal(self.n, self.kappa, self.delta)
        return theorem3_extremal(self.n, self.kappa, self.n1)


def _check_thm1(n: int, kappa: int) -> None:
    if kappa < 1 or n < kappa + 4:
        raise InvalidArgument(f"need kappa >= 1 and n >= kappa + 4, got n={n}, kappa={kappa}")


def _check_thm2(n: int, kappa: int, delta: int) -> None:
    _check_thm1(n, kappa)
    if delta < 1:
        raise InvalidArgument(f"need delta >= 1, got {delta}")


def _check_thm3(n: int, k: int, n1: int) -> None:
    if k < 1 or not 2 <= n1 <= n - k - 2:
        raise InvalidArgument(f"need k >= 1 and 2 <= n1 <= n-k-2, got n={n}, k={k}, n1={n1}")


def clique_join(s: int, parts: list[int] | tuple[int, ...]) -> Graph:
    """``K_s ∨ (K_{parts[0]} ∪ K_{parts[1]} ∪ ...)``."""
    if s < 1 or not parts or min(parts) < 1:
        raise InvalidArgument(f"need s >= 1 and positive part sizes, got s={s}, parts={parts}")
    rest = complete_graph(parts[0])
    for size in parts[1:]:
        rest = disjoint_union(rest, complete_graph(size))
    return join(complete_graph(s), rest)


def theorem1_extremal(n: int, kappa: int) -> Graph:
    """``K_κ' ∨ (K_2 ∪ K_{n-κ'-2})``, the minimiser for essential connectivity κ'."""
    _check_thm1(n, kappa)
    return clique_join(kappa, [2, n - kappa - 2])


def _thm2_low_degree(n: int, kappa: int, delta: int) -> Graph:
    # clique 0..kappa-1, lone vertex `kappa`, big clique, then z = n-1
    base = join(complete_graph(kappa), disjoint_union(complete_graph(1), complete_graph(n - kappa - 2)))
    z = n - 1
    rows = list(base.adj) + [0]
    for v in list(range(delta - 1)) + [kappa]:
        rows[z] |= 1 << v
        rows[v] |= 1 << z
    return Graph(n, tuple(rows))


def theorem2_extremal(n: int, kappa: int, delta: int) -> Graph:
    """Minimiser among graphs with essential connectivity κ' and minimum degree δ.

    When ``κ' > δ - 1`` a vertex ``z`` is attached to ``δ - 1`` vertices of
    the joining clique and to the lone vertex of ``K_κ' ∨ (K_1 ∪ K_{n-κ'-2})``;
    otherwise the graph is ``K_κ' ∨ (K_{n-δ-1} ∪ K_{δ-κ'+1})``. The result is
    audited, and :class:`ConstructionInfeasible` is raised if its minimum
    degree or essential connectivity differ from the request.
    """
    _check_thm2(n, kappa, delta)
    if kappa > delta - 1:
        g = _thm2_low_degree(n, kappa, delta)
    else:
        big, small = n - delta - 1, delta - kappa + 1
        if big < 1:
            raise ConstructionInfeasible(f"K_{{n-δ-1}} is empty for n={n}, δ={delta}")
        g = clique_join(kappa, [big, small])
    got_delta = min_degree(g)
    cert = essential_connectivity(g)
    got_kappa = None if cert is None else cert.size
    if got_delta != delta or got_kappa != kappa:
        raise ConstructionInfeasible(
            f"construction for (n={n}, κ'={kappa}, δ={delta}) has min degree {got_delta} "
            f"and essential connectivity {got_kappa}")
    return g


def theorem2_case(kappa: int, delta: int) -> str:
    """Which construction branch applies: ``"pendant"`` (κ' > δ-1) or ``"join"``."""
    return "pendant" if kappa > delta - 1 else "join"


def theorem3_extremal(n: int, k: int, n1: int) -> Digraph:
    """``K_k ∇ (K_{n1} ∪ K_{n-k-n1})`` plus every arc from the n1-clique to the other.

    Layout: ``0..k-1`` joining clique, then the ``n1`` clique, then the
    ``n - k - n1`` clique.
    """
    _check_thm3(n, k, n1)
    n2 = n - k - n1
    d = directed_join(complete_digraph(k), digraph_disjoint_union(complete_digraph(n1), complete_digraph(n2)))
    second = ((1 << n2) - 1) << (k + n1)
    rows = list(d.out_adj)
    for u in range(k, k + n1):
        rows[u] |= second
    return Digraph(n, tuple(rows))


def family_discriminant(x: float, n: int, k: int) -> float:
    """``-4x^2 + 4(n-k)x + 4n - 4``, the discriminant term of the family's quadratic."""
    if k < 1 or not 2 <= x <= n - k - 2:
        raise InvalidArgument(f"need k >= 1 and 2 <= x <= n-k-2, got x={x}, n={n}, k={k}")
    return -4 * x * x + 4 * (n - k) * x + 4 * n - 4


def family_discriminant_argmin(n: int, k: int) -> list[int]:
    """Integer minimisers of :func:`family_discriminant` over ``[2, n-k-2]``."""
    if k < 1 or n - k - 2 < 2:
        raise InvalidArgument(f"empty range [2, n-k-2] for n={n}, k={k}")
    values = {x: family_discriminant(x, n, k) for x in range(2, n - k - 1)}
    low = min(values.values())
    return sorted(x for x, v in values.items() if v == low)
