import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from hypercontainers.core import Hypergraph


def random_hypergraph(rng: random.Random, n_max=10, k_max=3, m_max=12) -> Hypergraph:
    n = rng.randint(2, n_max)
    k = rng.randint(1, min(k_max, n))
    from math import comb
    m = rng.randint(0, min(m_max, comb(n, k)))
    edges = set()
    while len(edges) < m:
        edges.add(tuple(sorted(rng.sample(range(n), k))))
    return Hypergraph(n, k, tuple(sorted(edges)))


@st.composite
def hypergraphs(draw, n_max=10, k_max=3, m_max=12):
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return random_hypergraph(random.Random(seed), n_max, k_max, m_max)


def all_ell_subsets(h: Hypergraph, ell: int):
    return set(combinations(range(h.n), ell))
