import math
import random
from itertools import combinations

import pytest
from hypothesis import given, settings

from hypercontainers.bounded import (
    OracleSizeError,
    brute_force_max_bounded,
    greedy_bounded_sub,
    is_expanding,
    max_bounded_size,
    max_bounded_sub,
    satisfies_expansive,
)
from hypercontainers.core import Hypergraph, is_bounded, new_hypergraph, vertex_fiber
from hypercontainers.engine import derive_params

from conftest import hypergraphs, random_hypergraph

STAR = new_hypergraph(4, 2, [(0, 1), (0, 2), (0, 3)])


class TestExact:
    def test_star_capped(self):
        # vertex cap at delta=0.5 is 2; lexicographically least witness
        w = max_bounded_sub(STAR, 0.5)
        assert w.exact
        assert w.sub.edges == ((0, 1), (0, 2))

    def test_one_uniform_is_itself(self):
        h = new_hypergraph(5, 1, [(0,), (2,), (4,)])
        w = max_bounded_sub(h, 0.0)
        assert w.exact and w.sub.edges == h.edges

    def test_empty(self):
        w = max_bounded_sub(new_hypergraph(4, 2, []), 0.5)
        assert len(w) == 0

    def test_size_guard(self):
        rng = random.Random(0)
        edges = set()
        while len(edges) < 30:
            edges.add(tuple(sorted(rng.sample(range(9), 3))))
        h = Hypergraph(9, 3, tuple(sorted(edges)))
        with pytest.raises(OracleSizeError):
            max_bounded_sub(h, 0.3, exact_cap=24)
        with pytest.raises(OracleSizeError):
            max_bounded_size(h, 0.3, exact_cap=24)


class TestGreedy:
    def test_star_scan(self):
        w = greedy_bounded_sub(STAR, 0.5)
        assert not w.exact
        assert w.sub.edges == ((0, 1), (0, 2))

    def test_already_bounded_kept(self):
        h = new_hypergraph(6, 2, [(0, 1), (2, 3), (4, 5)])
        assert greedy_bounded_sub(h, 0.0).sub.edges == h.edges

    def test_triangle_delta_zero(self):
        h = new_hypergraph(4, 2, [(0, 1), (0, 2), (1, 2)])
        assert greedy_bounded_sub(h, 0.0).sub.edges == ((0, 1),)


@given(hypergraphs(n_max=8, m_max=9))
@settings(max_examples=50, deadline=None)
def test_exact_matches_brute_force(h):
    for delta in (0.0, 0.25, 0.5, 0.75, 1.0):
        w = max_bounded_sub(h, delta)
        assert len(w) == brute_force_max_bounded(h, delta)
        assert is_bounded(w.sub, delta)
        assert set(w.sub.edges) <= set(h.edges)
        assert len(greedy_bounded_sub(h, delta)) <= len(w)


@given(hypergraphs(n_max=8, m_max=10))
@settings(max_examples=40, deadline=None)
def test_fiber_monotone_in_fingerprint(h):
    if h.k < 2:
        return
    verts = sorted(h.covered_vertices())
    if len(verts) < 2:
        return
    small, big = set(verts[:1]), set(verts[:2])
    hf_small = vertex_fiber(h, small)
    hf_big = vertex_fiber(h, big)
    assert set(hf_small.edges) <= set(hf_big.edges)
    for delta in (0.0, 0.5, 1.0):
        assert max_bounded_size(hf_small, delta) <= max_bounded_size(hf_big, delta)


class TestPredicates:
    def test_empty_fingerprint_never_expanding(self):
        p = derive_params(2, 0.7, 0.2, 16)
        assert not is_expanding(STAR, frozenset(), p)

    def test_empty_fingerprint_expansive(self):
        p = derive_params(2, 0.7, 0.2, 16)
        assert satisfies_expansive(STAR, frozenset(), p)

    def test_singleton_empty_fiber_not_expansive(self):
        h = new_hypergraph(8, 2, [(0, 1)])
        p = derive_params(2, 0.9, 0.1, 8)
        # vertex 5 is isolated: fiber empty, positive threshold
        assert not satisfies_expansive(h, {5}, p)

    def test_expanding_fixed_threshold(self):
        # n=16, k=2: threshold n^(1-eps') with eps'=0.5 is 4; |H_F| = 5
        h = new_hypergraph(16, 2, [(0, v) for v in range(1, 6)])
        p = derive_params(2, 0.7, 0.2, 16)
        p = type(p)(**{**p.__dict__, "eps_p": 0.5, "delta_p": 1.0})
        assert is_expanding(h, {0}, p)
        h4 = new_hypergraph(16, 2, [(0, v) for v in range(1, 4)])
        assert not is_expanding(h4, {0}, p)

    def test_expansive_fixed_arithmetic(self):
        # |F| = 2, 1-uniform fiber of size 7, per-element threshold 3: 7 >= 6
        n = 16
        h = new_hypergraph(n, 2, [(0, v) for v in range(2, 7)] + [(1, v) for v in range(5, 9)])
        # fiber over {0,1} is {2,...,8}: 7 vertices
        p = derive_params(2, 0.7, 0.2, n)
        tau = math.log(3, n)  # threshold n^tau = 3 per element
        p = type(p)(**{**p.__dict__, "delta_p": tau, "eps_tilde": 0.0})
        assert satisfies_expansive(h, {0, 1}, p)
        p6 = type(p)(**{**p.__dict__, "delta_p": math.log(4, n), "eps_tilde": 0.0})
        assert not satisfies_expansive(h, {0, 1}, p6)  # 7 < 8


def test_expansive_implies_expanding_above_pi_tilde():
    # the two thresholds coincide at log|F| = pi~, so a fingerprint at
    # least that large satisfying the growth inequality is expanding
    rng = random.Random(5)
    checked = 0
    for _ in range(300):
        h = random_hypergraph(rng, n_max=9, k_max=3, m_max=10)
        if h.k < 2 or not h.edges:
            continue
        p = derive_params(h.k, rng.uniform(0.3, 1.0), rng.uniform(0.0, 1.0), h.n)
        verts = sorted(h.covered_vertices())
        f = frozenset(rng.sample(verts, min(len(verts), rng.randint(1, 3))))
        if satisfies_expansive(h, f, p) and math.log(len(f), h.n) >= p.pi_tilde:
            assert is_expanding(h, f, p)
            checked += 1
    assert checked > 0
