"""Oracle for the maximum delta-bounded subhypergraph and the two
fingerprint predicates ("expanding" and the per-element growth
inequality) built on top of it.

Exact routes:
  * 1-uniform: every subhypergraph is bounded, so the answer is the input.
  * 2-uniform: degree-constrained subgraph, solved exactly at any size by
    a reduction of simple b-matching to maximum matching (vertex copies +
    one gadget pair per edge; max matching = m + optimum).
  * general uniformity: branch-and-bound over edges in canonical order,
    include-first, guarded by an edge-count cap (subset maximization with
    codegree caps has no known general poly-time algorithm).

Among maximum witnesses the lexicographically least edge subset is
returned, so downstream construction steps are deterministic functions of
their inputs.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from .core import Edge, Hypergraph, cmp_log, is_bounded, log_size, pow_floor, vertex_fiber

DEFAULT_EXACT_CAP = 24

# size memo: (n, k, edges, delta) -> |H|_delta.  First-writer-wins with
# identical values, so concurrent access is harmless.
_size_memo: dict[tuple, int] = {}


class OracleSizeError(RuntimeError):
    """Exact mode refused: instance exceeds the configured edge cap."""


@dataclass(frozen=True)
class BoundedWitness:
    """A delta-bounded subhypergraph certifying a value of |H|_delta."""

    sub: Hypergraph
    delta: float
    exact: bool

    def __len__(self) -> int:
        return len(self.sub.edges)


def _level_caps(hp: Hypergraph, delta: float) -> dict[int, int]:
    """Integer codegree cap per level ell: largest d with d <= n^((k-ell) delta)."""
    return {ell: pow_floor(hp.n, (hp.k - ell) * delta) for ell in range(1, hp.k)}


def _bmatching_max(edges: list[Edge], cap: int) -> int:
    """Max number of edges of a simple graph keepable with all degrees <= cap."""
    if cap <= 0 or not edges:
        return 0
    touched = sorted({v for e in edges for v in e})
    caps = {v: min(cap, sum(1 for e in edges if v in e)) for v in touched}
    g = nx.Graph()
    for idx, (u, v) in enumerate(edges):
        eu, ev = ("e", idx, 0), ("e", idx, 1)
        g.add_edge(eu, ev)
        for i in range(caps[u]):
            g.add_edge(eu, ("v", u, i))
        for i in range(caps[v]):
            g.add_edge(ev, ("v", v, i))
    matching = nx.max_weight_matching(g, maxcardinality=True)
    return len(matching) - len(edges)


def _bnb_max(edges: list[Edge], caps: dict[int, int], find_witness: bool):
    """Branch-and-bound, include-first in canonical order.

    Updating the incumbent only on strict improvement makes the first
    maximum found the lexicographically least one.
    Returns (size, witness or None).
    """
    m = len(edges)
    best_size = 0
    best_witness: tuple[Edge, ...] = ()
    counts: dict[Edge, int] = {}
    chosen: list[Edge] = []

    def fits(e: Edge) -> bool:
        return all(
            counts.get(u, 0) < caps[ell]
            for ell in caps
            for u in combinations(e, ell)
        )

    def rec(i: int) -> None:
        nonlocal best_size, best_witness
        if len(chosen) + (m - i) <= best_size and best_size > 0:
            return
        if i == m:
            if len(chosen) > best_size:
                best_size = len(chosen)
                best_witness = tuple(chosen)
            return
        e = edges[i]
        if fits(e):
            chosen.append(e)
            for ell in caps:
                for u in combinations(e, ell):
                    counts[u] = counts.get(u, 0) + 1
            rec(i + 1)
            for ell in caps:
                for u in combinations(e, ell):
                    counts[u] -= 1
            chosen.pop()
        rec(i + 1)

    rec(0)
    return best_size, (best_witness if find_witness else None)


def max_bounded_size(hp: Hypergraph, delta: float,
                     exact_cap: int = DEFAULT_EXACT_CAP) -> int:
    """|hp|_delta, the maximum size of a delta-bounded subhypergraph.

    Raises OracleSizeError for uniformity >= 3 beyond the edge cap.
    """
    if hp.k == 1 or not hp.edges:
        return len(hp.edges)
    key = (hp.n, hp.k, hp.edges, delta)
    hit = _size_memo.get(key)
    if hit is not None:
        return hit
    if hp.k == 2:
        cap = pow_floor(hp.n, delta)
        size = _bmatching_max(list(hp.edges), cap)
    else:
        if len(hp.edges) > exact_cap:
            raise OracleSizeError(
                f"{len(hp.edges)} edges exceeds exact-mode cap {exact_cap}")
        size, _ = _bnb_max(list(hp.edges), _level_caps(hp, delta), False)
    _size_memo[key] = size
    return size


def max_bounded_sub(hp: Hypergraph, delta: float,
                    exact_cap: int = DEFAULT_EXACT_CAP) -> BoundedWitness:
    """Exact maximum delta-bounded subhypergraph, lexicographically least
    among the maximum witnesses."""
    if hp.k == 1 or not hp.edges:
        return BoundedWitness(hp, delta, True)
    if hp.k == 2:
        cap = pow_floor(hp.n, delta)
        edges = list(hp.edges)
        target = _bmatching_max(edges, cap)
        chosen: list[Edge] = []
        deg: dict[int, int] = {}
        rest = edges
        while rest:
            e, rest = rest[0], rest[1:]
            u, v = e
            if deg.get(u, 0) >= cap or deg.get(v, 0) >= cap:
                continue
            residual = {w: cap - deg.get(w, 0) for w in range(hp.n)}
            residual[u] -= 1
            residual[v] -= 1
            achievable = 1 + _bmatching_residual(rest, residual)
            if len(chosen) + achievable >= target:
                chosen.append(e)
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
                if len(chosen) == target:
                    break
        sub = hp.restrict(chosen)
        return BoundedWitness(sub, delta, True)
    if len(hp.edges) > exact_cap:
        raise OracleSizeError(
            f"{len(hp.edges)} edges exceeds exact-mode cap {exact_cap}")
    size, witness = _bnb_max(list(hp.edges), _level_caps(hp, delta), True)
    return BoundedWitness(hp.restrict(witness), delta, True)


def _bmatching_residual(edges: list[Edge], residual: dict[int, int]) -> int:
    """Max keepable edges under per-vertex residual caps (b-matching)."""
    edges = [e for e in edges if residual[e[0]] > 0 and residual[e[1]] > 0]
    if not edges:
        return 0
    g = nx.Graph()
    for idx, (u, v) in enumerate(edges):
        eu, ev = ("e", idx, 0), ("e", idx, 1)
        g.add_edge(eu, ev)
        for i in range(min(residual[u], sum(1 for e in edges if u in e))):
            g.add_edge(eu, ("v", u, i))
        for i in range(min(residual[v], sum(1 for e in edges if v in e))):
            g.add_edge(ev, ("v", v, i))
    matching = nx.max_weight_matching(g, maxcardinality=True)
    return len(matching) - len(edges)


def greedy_bounded_sub(hp: Hypergraph, delta: float) -> BoundedWitness:
    """Greedy lower bound: scan edges in canonical order, keep an edge iff
    no codegree cap is violated.  Fast fallback for large fibers."""
    if hp.k == 1:
        return BoundedWitness(hp, delta, False)
    caps = _level_caps(hp, delta)
    counts: dict[Edge, int] = {}
    kept: list[Edge] = []
    for e in hp.edges:
        subs = [(u, ell) for ell in caps for u in combinations(e, ell)]
        if all(counts.get(u, 0) < caps[ell] for u, ell in subs):
            kept.append(e)
            for u, _ell in subs:
                counts[u] = counts.get(u, 0) + 1
    return BoundedWitness(hp.restrict(kept), delta, False)


def brute_force_max_bounded(hp: Hypergraph, delta: float) -> int:
    """Independent oracle: exhaustive DFS over all edge subsets with
    incremental codegree counters.  For tests on small instances only."""
    if hp.k == 1:
        return len(hp.edges)
    caps = _level_caps(hp, delta)
    edges = list(hp.edges)
    counts: dict[Edge, int] = {}
    best = 0

    def rec(i: int, size: int) -> None:
        nonlocal best
        if i == len(edges):
            best = max(best, size)
            return
        e = edges[i]
        subs = [(u, ell) for ell in caps for u in combinations(e, ell)]
        if all(counts.get(u, 0) < caps[ell] for u, ell in subs):
            for u, _ell in subs:
                counts[u] = counts.get(u, 0) + 1
            rec(i + 1, size + 1)
            for u, _ell in subs:
                counts[u] -= 1
        rec(i + 1, size)

    rec(0, 0)
    return best


def is_expanding(h: Hypergraph, f, params, exact_cap: int = DEFAULT_EXACT_CAP) -> bool:
    """F is expanding: log |H_F|_{delta'} >= 1 + (k-2) delta' - eps'."""
    fs = frozenset(f)
    if not fs:
        return False
    hf = vertex_fiber(h, fs)
    size = max_bounded_size(hf, params.delta_p, exact_cap)
    return cmp_log(size, 1 + (h.k - 2) * params.delta_p - params.eps_p, h.n) >= 0


def satisfies_expansive(h: Hypergraph, f, params,
                        exact_cap: int = DEFAULT_EXACT_CAP) -> bool:
    """Per-element growth inequality:
    log |H_F|_{delta'} >= log|F| + (k-1) delta' - eps~.

    The empty set satisfies it (both sides are log 0)."""
    fs = frozenset(f)
    if not fs:
        return True
    hf = vertex_fiber(h, fs)
    size = max_bounded_size(hf, params.delta_p, exact_cap)
    tau = log_size(len(fs), h.n) + (h.k - 1) * params.delta_p - params.eps_tilde
    return cmp_log(size, tau, h.n) >= 0
