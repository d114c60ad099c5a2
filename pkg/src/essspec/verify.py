"""Desk-scale verification of the extremal results and supporting lemmas.

Graph claims are checked exhaustively over the census of labeled connected
graphs. Digraph claims are checked on the whole bridged-clique family plus
a seeded random sample of strongly connected digraphs.

Comparison discipline: every spectral radius comes with a Collatz-Wielandt
enclosure. A candidate counts as strictly worse than the incumbent only if
its lower bound exceeds the incumbent's upper bound by more than
``compare_tol`` (relative). Anything closer is a tie, and ties are settled by
canonical form against the construction, never by the float values alone.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

import numpy as np

from .canon import MAX_CANON_N, canonical_form
from .census import DEFAULT_MAX_N, Census, cached_census, graph_from_mask
from .connectivity import digraph_essential_connectivity
from .errors import ConstructionInfeasible, InvalidArgument, NonConvergenceError, PreconditionError
from .formats import write_digraph6
from .extremal import (
    clique_join,
    family_discriminant,
    family_discriminant_argmin,
    theorem1_extremal,
    theorem2_case,
    theorem2_extremal,
    theorem3_extremal,
)
from .graphs import Digraph, Graph, is_connected, is_strongly_connected
from .spectral import (
    DEFAULT_TOL,
    SpectralResult,
    digraph_family_lambda1_closed_form,
    graph_spectral_radius,
)

DEFAULT_SEED = 0x5EED_2024
COMPARE_TOL = 1e-9
RETRY_TOLS = (1e-13, 1e-14)


@dataclass(frozen=True)
class Enclosure:
    value: float
    lower: float
    upper: float


@dataclass
class VerificationReport:
    claim: str
    parameters: dict[str, Any]
    candidates_examined: int
    minimizer_canonical: str | None
    construction_canonical: str | None
    min_lambda1: Enclosure | None
    extremal_matches: bool
    uniqueness: bool
    runtime_ms: int
    tied_canonical: list[str] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def comparable(self) -> dict[str, Any]:
        """The report without its timing, for determinism checks."""
        d = self.to_dict()
        d.pop("runtime_ms")
        d["parameters"] = {k: v for k, v in d["parameters"].items() if k != "threads"}
        return d


def _ms_since(start: float) -> int:
    return int(round((time.perf_counter() - start) * 1000))


def _canon_str(g: Graph | Digraph) -> str:
    return canonical_form(g).decode("ascii")


# -- exhaustive graph claims ---------------------------------------------


def _minimizers(census: Census, idx: np.ndarray, target: str | None,
                compare_tol: float) -> tuple[dict[str, Any], list[str]]:
    """Reduce a census bucket to its minimum enclosure and tie set."""
    upper = census.upper[idx]
    best = idx[int(np.argmin(upper))]
    cap = census.upper[best] * (1 + compare_tol)
    ties = idx[census.lower[idx] <= cap]
    form_of = {int(i): _canon_str(census.graph(int(i))) for i in ties}
    tied = sorted(set(form_of.values()))
    chosen = target if target in tied else form_of[int(best)]
    # enclosure of the chosen minimiser, taken from any labelled copy of it
    rep = int(best) if form_of[int(best)] == chosen else min(i for i, f in form_of.items() if f == chosen)
    enc = Enclosure(float(0.5 * (census.lower[rep] + census.upper[rep])),
                    float(census.lower[rep]), float(census.upper[rep]))
    return {"enclosure": enc, "minimizer": chosen, "tie_count": int(len(ties))}, tied


def _graph_claim(claim: str, params: dict[str, Any], census: Census, mask: np.ndarray,
                 construction: Graph | None, compare_tol: float, start: float,
                 flags: list[str]) -> VerificationReport:
    idx = np.flatnonzero(mask)
    target = _canon_str(construction) if construction is not None else None
    if len(idx) == 0:
        return VerificationReport(claim, params, 0, None, target, None, False, False,
                                  _ms_since(start), flags=flags + ["empty-class"])
    red, tied = _minimizers(census, idx, target, compare_tol)
    matches = target is not None and red["minimizer"] == target
    unique = matches and tied == [target]
    if len(tied) > 1:
        flags = flags + ["ambiguous-tie"]
    enc = red["enclosure"]
    if (enc.upper - enc.lower) > compare_tol * enc.upper:
        flags = flags + ["enclosure-too-wide"]
        matches = False
    return VerificationReport(
        claim, params, int(len(idx)), red["minimizer"], target, enc, matches, unique,
        _ms_since(start), tied_canonical=tied, flags=flags,
        details={"labeled_minimizers": red["tie_count"]})


def _require_range(n: int, kappa: int, max_n: int) -> None:
    if kappa < 1 or n < kappa + 4:
        raise InvalidArgument(f"need kappa >= 1 and n >= kappa + 4, got n={n}, kappa={kappa}")
    if n > max_n:
        raise InvalidArgument(f"n={n} exceeds the enumeration guard max_n={max_n}")


def verify_theorem1(n: int, kappa: int, *, tol: float = DEFAULT_TOL, threads: int = 1,
                    max_n: int = DEFAULT_MAX_N, compare_tol: float = COMPARE_TOL) -> VerificationReport:
    """Exhaustive check that ``K_κ' ∨ (K_2 ∪ K_{n-κ'-2})`` is the unique minimiser."""
    start = time.perf_counter()
    _require_range(n, kappa, max_n)
    census = cached_census(n, tol, threads, max_n)
    params = {"n": n, "kappa": kappa, "tol": tol, "compare_tol": compare_tol, "threads": threads}
    return _graph_claim("THM1", params, census, census.kappa == kappa,
                        theorem1_extremal(n, kappa), compare_tol, start, [])


def verify_theorem2(n: int, kappa: int, delta: int, *, tol: float = DEFAULT_TOL, threads: int = 1,
                    max_n: int = DEFAULT_MAX_N, compare_tol: float = COMPARE_TOL) -> VerificationReport:
    """Exhaustive check of the minimiser with fixed essential connectivity and minimum degree."""
    start = time.perf_counter()
    _require_range(n, kappa, max_n)
    if delta < 1:
        raise InvalidArgument(f"need delta >= 1, got {delta}")
    params = {"n": n, "kappa": kappa, "delta": delta, "tol": tol, "compare_tol": compare_tol,
              "threads": threads, "case": theorem2_case(kappa, delta)}
    flags = ["delta-one-admitted"] if delta == 1 else []
    try:
        construction = theorem2_extremal(n, kappa, delta)
    except ConstructionInfeasible as exc:
        construction = None
        flags.append("construction-infeasible")
        params["infeasible_reason"] = str(exc)
    census = cached_census(n, tol, threads, max_n)
    return _graph_claim("THM2", params, census, (census.kappa == kappa) & (census.delta == delta),
                        construction, compare_tol, start, flags)


# -- digraph family -------------------------------------------------------


def _random_digraph(n: int, p: float, rng: random.Random) -> Digraph:
    rows = [0] * n
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < p:
                rows[u] |= 1 << v
    return Digraph(n, tuple(rows))


SAMPLE_DENSITIES = (0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)


def sample_essential_digraphs(n: int, k: int, count: int, seed: int = DEFAULT_SEED,
                              budget: int = 200_000) -> tuple[list[Digraph], int]:
    """Rejection-sample strongly connected digraphs with essential connectivity ``k``.

    Arc densities cycle through :data:`SAMPLE_DENSITIES`. Returns the hits
    and the number of attempts used; fewer than ``count`` hits means the
    budget ran out.
    """
    rng = random.Random(seed)
    hits: list[Digraph] = []
    attempts = 0
    while len(hits) < count and attempts < budget:
        p = SAMPLE_DENSITIES[attempts % len(SAMPLE_DENSITIES)]
        attempts += 1
        d = _random_digraph(n, p, rng)
        if not is_strongly_connected(d):
            continue
        cert = digraph_essential_connectivity(d)
        if cert is not None and cert.size == k:
            hits.append(d)
    return hits, attempts


def verify_theorem3_family(n: int, k: int, *, samples: int = 200, seed: int = DEFAULT_SEED,
                           budget: int = 200_000, sample_max_n: int = 7, tol: float = DEFAULT_TOL,
                           compare_tol: float = COMPARE_TOL) -> VerificationReport:
    """Sweep the bridged-clique family over n1 and compare against random digraphs."""
    start = time.perf_counter()
    if k < 1 or n < k + 4:
        raise InvalidArgument(f"need k >= 1 and n >= k + 4, got n={n}, k={k}")
    sweep = []
    results: dict[int, SpectralResult] = {}
    for n1 in range(2, n - k - 1):
        res = graph_spectral_radius(theorem3_extremal(n, k, n1), tol)
        closed = digraph_family_lambda1_closed_form(n, k, n1)
        results[n1] = res
        sweep.append({"n1": n1, "lambda1": res.lambda1, "lower": res.lower, "upper": res.upper,
                      "closed_form": closed, "rel_error": abs(res.lambda1 - closed) / closed})
    best = min(results, key=lambda m: results[m].upper)
    cap = results[best].upper * (1 + compare_tol)
    argmin = sorted(m for m, r in results.items() if r.lower <= cap)
    expected = sorted({2, n - k - 2})
    closed_ok = all(row["rel_error"] <= COMPARE_TOL for row in sweep)
    bound = (n - 2 + math.sqrt((n - 2) ** 2 + 12 * n - 8 * k - 20)) / 2
    fam = results[best]
    bound_ok = abs(fam.lambda1 - bound) <= COMPARE_TOL * bound

    named = [theorem3_extremal(n, k, 2), theorem3_extremal(n, k, n - k - 2)]
    flags: list[str] = []
    if n <= MAX_CANON_N:
        named_forms = [_canon_str(d) for d in named]
    else:
        named_forms = [write_digraph6(d).decode("ascii") for d in named]
        flags.append("canonical-form-skipped")
    details: dict[str, Any] = {"sweep": sweep, "argmin_n1": argmin, "closed_form_min": bound,
                               "named_minimizers": named_forms}
    sampling_ok = True
    examined = len(sweep)
    if n <= sample_max_n and samples > 0:
        hits, attempts = sample_essential_digraphs(n, k, samples, seed, budget)
        radii = [graph_spectral_radius(d, tol) for d in hits]
        low = min(radii, key=lambda r: r.lower, default=None)
        violations = 0
        at_minimum = 0
        for r in radii:
            if r.lower < fam.upper - COMPARE_TOL:
                violations += 1
            elif r.lower <= fam.upper * (1 + compare_tol):
                at_minimum += 1
        details["sampling"] = {"seed": seed, "budget": budget, "attempts": attempts,
                               "hits": len(hits), "requested": samples, "violations": violations,
                               "hits_at_family_minimum": at_minimum,
                               "min_sampled_lambda1": None if low is None else low.lambda1}
        examined += len(hits)
        if len(hits) < samples:
            flags.append("sampling-partial")
            sampling_ok = False
        if violations:
            flags.append("sample-below-family-minimum")
            sampling_ok = False
    matches = argmin == expected and closed_ok and bound_ok and sampling_ok
    enc = Enclosure(fam.lambda1, fam.lower, fam.upper)
    params = {"n": n, "k": k, "samples": samples, "seed": seed, "tol": tol, "compare_tol": compare_tol}
    return VerificationReport(
        "THM3", params, examined, named_forms[0], named_forms[0], enc, matches,
        argmin == expected, _ms_since(start), tied_canonical=sorted(set(named_forms)),
        flags=flags, details=details)


# -- lemma checks ---------------------------------------------------------


def _strictly_less(small: Callable[[float], SpectralResult], large: Callable[[float], SpectralResult],
                   tol: float) -> bool:
    """Decide ``λ(small) < λ(large)`` by enclosure separation, tightening on overlap."""
    for t in (tol,) + tuple(r for r in RETRY_TOLS if r < tol):
        try:
            a, b = small(t), large(t)
        except NonConvergenceError:
            break
        if a.upper < b.lower:
            return True
        if b.upper < a.lower:
            return False
    return False


def check_edge_monotonicity(g: Graph, edge: tuple[int, int], tol: float = DEFAULT_TOL) -> bool:
    """Does deleting ``edge`` strictly increase the distance spectral radius?"""
    u, v = edge
    if not g.has_edge(u, v):
        raise PreconditionError(f"({u}, {v}) is not an edge")
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    h = g.remove_edge(u, v)
    if not is_connected(h):
        raise PreconditionError(f"removing ({u}, {v}) disconnects the graph")
    return _strictly_less(lambda t: graph_spectral_radius(g, t), lambda t: graph_spectral_radius(h, t), tol)


def check_arc_monotonicity(d: Digraph, arc: tuple[int, int], tol: float = DEFAULT_TOL) -> bool:
    """Does adding ``arc`` strictly decrease the distance spectral radius?"""
    u, v = arc
    if u == v or d.has_arc(u, v):
        raise PreconditionError(f"arc ({u}, {v}) is already present or a loop")
    if not is_strongly_connected(d):
        raise PreconditionError("digraph is not strongly connected")
    e = d.add_arc(u, v)
    return _strictly_less(lambda t: graph_spectral_radius(e, t), lambda t: graph_spectral_radius(d, t), tol)


def balanced_profile(s: int, parts: list[int] | tuple[int, ...], p: int) -> list[int]:
    n = s + sum(parts)
    c = len(parts)
    return [n - s - p * (c - 1)] + [p] * (c - 1)


def _check_profile(s: int, parts: list[int] | tuple[int, ...], p: int) -> None:
    if s < 1 or p < 1 or not parts:
        raise InvalidArgument(f"need s >= 1, p >= 1 and at least one part, got s={s}, p={p}, parts={parts}")
    if list(parts) != sorted(parts, reverse=True):
        raise InvalidArgument(f"parts must be sorted descending, got {parts}")
    if parts[0] < 2 * p or parts[-1] < p:
        raise InvalidArgument(f"need parts[0] >= 2p and all parts >= p, got parts={parts}, p={p}")


def check_balancing_lemma(s: int, parts: list[int] | tuple[int, ...], p: int,
                          tol: float = DEFAULT_TOL) -> bool:
    """Is ``K_s ∨ (∪ K_parts)`` no better than the balanced profile, strictly unless equal?"""
    _check_profile(s, parts, p)
    target = balanced_profile(s, parts, p)
    if list(parts) == target:
        return True
    g, h = clique_join(s, list(parts)), clique_join(s, target)
    return _strictly_less(lambda t: graph_spectral_radius(h, t), lambda t: graph_spectral_radius(g, t), tol)


def balancing_profiles(max_s: int = 3, max_c: int = 3, p: int = 2, max_order: int = 12):
    """All admissible ``(s, parts)`` pairs within the given bounds."""
    for s in range(1, max_s + 1):
        for c in range(1, max_c + 1):
            room = max_order - s
            for parts in itertools.combinations_with_replacement(range(room, p - 1, -1), c):
                if parts[0] >= 2 * p and sum(parts) <= room:
                    yield s, list(parts)


# -- random campaigns -----------------------------------------------------


def _random_connected_graph(rng: random.Random, n: int) -> Graph:
    while True:
        p = rng.uniform(0.3, 0.9)
        g = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
        if is_connected(g):
            return g


def edge_monotonicity_campaign(trials: int = 1000, seed: int = DEFAULT_SEED, n_min: int = 4,
                               n_max: int = 8, tol: float = DEFAULT_TOL) -> dict[str, Any]:
    rng = random.Random(seed)
    failures = []
    done = 0
    while done < trials:
        n = rng.randint(n_min, n_max)
        g = _random_connected_graph(rng, n)
        safe = [e for e in g.edges() if is_connected(g.remove_edge(*e))]
        if not safe:
            continue
        e = rng.choice(safe)
        done += 1
        if not check_edge_monotonicity(g, e, tol):
            failures.append({"edges": g.edges(), "n": n, "edge": e})
    return {"trials": trials, "seed": seed, "failures": failures}


def arc_monotonicity_campaign(trials: int = 1000, seed: int = DEFAULT_SEED, n_min: int = 4,
                              n_max: int = 7, tol: float = DEFAULT_TOL) -> dict[str, Any]:
    rng = random.Random(seed)
    failures = []
    done = 0
    while done < trials:
        n = rng.randint(n_min, n_max)
        d = _random_digraph(n, rng.uniform(0.3, 0.8), rng)
        missing = [(u, v) for u in range(n) for v in range(n) if u != v and not d.has_arc(u, v)]
        if not missing or not is_strongly_connected(d):
            continue
        arc = rng.choice(missing)
        done += 1
        if not check_arc_monotonicity(d, arc, tol):
            failures.append({"n": n, "arcs": d.arcs(), "arc": arc})
    return {"trials": trials, "seed": seed, "failures": failures}


def _campaign_report(claim: str, result: dict[str, Any], start: float) -> VerificationReport:
    ok = not result["failures"]
    params = {k: v for k, v in result.items() if k != "failures"}
    return VerificationReport(claim, params, result["trials"], None, None, None, ok, ok,
                              _ms_since(start), details={"failures": result["failures"]})


def verify_edge_lemma(trials: int = 1000, seed: int = DEFAULT_SEED, tol: float = DEFAULT_TOL) -> VerificationReport:
    start = time.perf_counter()
    return _campaign_report("LEMMA-EDGE", edge_monotonicity_campaign(trials, seed, tol=tol), start)


def verify_arc_lemma(trials: int = 1000, seed: int = DEFAULT_SEED, tol: float = DEFAULT_TOL) -> VerificationReport:
    start = time.perf_counter()
    return _campaign_report("LEMMA-ARC", arc_monotonicity_campaign(trials, seed, tol=tol), start)


def verify_balancing_lemma(max_s: int = 3, max_c: int = 3, p: int = 2, max_order: int = 12,
                           tol: float = DEFAULT_TOL) -> VerificationReport:
    start = time.perf_counter()
    failures = [{"s": s, "parts": parts} for s, parts in balancing_profiles(max_s, max_c, p, max_order)
                if not check_balancing_lemma(s, parts, p, tol)]
    count = sum(1 for _ in balancing_profiles(max_s, max_c, p, max_order))
    ok = not failures
    params = {"max_s": max_s, "max_c": max_c, "p": p, "max_order": max_order, "tol": tol}
    return VerificationReport("LEMMA-BALANCE", params, count, None, None, None, ok, ok,
                              _ms_since(start), details={"failures": failures})


def verify_discriminant_lemma(n: int | None = None, k: int | None = None,
                              max_span: int = 50) -> VerificationReport:
    """Endpoint minimality of the family discriminant.

    With ``n`` and ``k`` given, checks that one case; otherwise scans every
    span ``n - k`` from 5 to ``max_span`` (the value only depends on ``n``
    through the span and a shift, so ``k = 1`` is used).
    """
    start = time.perf_counter()
    cases = [(n, k)] if n is not None and k is not None else [(span + 1, 1) for span in range(5, max_span + 1)]
    failures = []
    for nn, kk in cases:
        argmin = family_discriminant_argmin(nn, kk)
        endpoint = family_discriminant(2, nn, kk)
        if not set(argmin) <= {2, nn - kk - 2} or endpoint != 12 * nn - 8 * kk - 20:
            failures.append({"n": nn, "k": kk, "argmin": argmin, "f2": endpoint})
    ok = not failures
    params = {"n": n, "k": k, "max_span": max_span}
    details: dict[str, Any] = {"failures": failures}
    if n is not None and k is not None:
        details["argmin"] = family_discriminant_argmin(n, k)
        details["f_at_2"] = family_discriminant(2, n, k)
    return VerificationReport("LEMMA-F", params, len(cases), None, None, None, ok, ok,
                              _ms_since(start), details=details)


__all__ = [
    "VerificationReport", "Enclosure", "verify_theorem1", "verify_theorem2", "verify_theorem3_family",
    "check_edge_monotonicity", "check_arc_monotonicity", "check_balancing_lemma",
    "verify_edge_lemma", "verify_arc_lemma", "verify_balancing_lemma", "verify_discriminant_lemma",
    "sample_essential_digraphs", "balanced_profile", "balancing_profiles", "graph_from_mask",
]
