"""Pure vs native kernel equivalence, and kernels vs the rich Python paths.

The two backends implement the same algorithms step for step, so everything
they return (including tie-breaking and exhaustion-by-node-count) must be
bit-identical.
"""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperchrome import _kernels
from hyperchrome._kernels import pure
from hyperchrome import coloring as col
from hyperchrome import constructions as cons
from hyperchrome.core import VertexOrder

try:
    from hyperchrome._kernels import _native
except ImportError:
    _native = None

needs_native = pytest.mark.skipif(_native is None,
                                  reason="native kernel not built")


def random_instance(seed, n_max=10):
    rng = random.Random(seed)
    n = rng.randrange(1, n_max + 1)
    m_max = math.comb(n, 3) if n >= 3 else 0
    m = rng.randrange(0, min(m_max, 20) + 1)
    G = cons.random_3graph(n, m, seed) if n >= 3 else None
    edges = list(G.edges) if G else []
    perm = list(range(n))
    rng.shuffle(perm)
    pos = [0] * n
    for i, v in enumerate(perm):
        pos[v] = i
    return n, edges, perm, pos


@needs_native
class TestBackendEquivalence:
    @given(st.integers(0, 10_000))
    @settings(max_examples=120, deadline=None)
    def test_greedy_count(self, seed):
        n, edges, order, _ = random_instance(seed)
        assert pure.greedy_color_count(n, edges, order) == \
            _native.greedy_color_count(n, edges, order)

    @given(st.integers(0, 10_000))
    @settings(max_examples=120, deadline=None)
    def test_longest_chain(self, seed):
        n, edges, _, pos = random_instance(seed)
        assert pure.longest_ordered_chain(n, edges, pos) == \
            _native.longest_ordered_chain(n, edges, pos)

    @given(st.integers(0, 10_000), st.integers(1, 4))
    @settings(max_examples=120, deadline=None)
    def test_kcolor(self, seed, k):
        n, edges, order, _ = random_instance(seed)
        assert pure.kcolor_search(n, edges, k, order) == \
            _native.kcolor_search(n, edges, k, order)

    @given(st.integers(0, 10_000))
    @settings(max_examples=120, deadline=None)
    def test_mis(self, seed):
        n, edges, _, _ = random_instance(seed)
        assert pure.mis_search(n, edges) == _native.mis_search(n, edges)

    @given(st.integers(0, 5_000), st.integers(1, 200))
    @settings(max_examples=60, deadline=None)
    def test_budget_exhaustion_identical(self, seed, cap):
        n, edges, order, _ = random_instance(seed)
        assert pure.kcolor_search(n, edges, 2, order, max_nodes=cap) == \
            _native.kcolor_search(n, edges, 2, order, max_nodes=cap)
        assert pure.mis_search(n, edges, max_nodes=cap) == \
            _native.mis_search(n, edges, max_nodes=cap)


class TestKernelAgainstRichPaths:
    def test_greedy_kernel_matches_traced_greedy(self):
        for seed in range(60):
            n, edges, order, _ = random_instance(seed, n_max=8)
            if n < 3:
                continue
            G = cons.random_3graph(n, len(edges), seed)
            tr = col.greedy_pluhar(G, VertexOrder(tuple(order)))
            assert _kernels.greedy_color_count(n, list(G.edges), order) == \
                tr.coloring.used()

    def test_chain_kernel_matches_bruteforce(self):
        from oracles import brute_longest_chain
        for seed in range(40):
            rng = random.Random(seed)
            n = rng.randrange(3, 7)
            m = rng.randrange(0, math.comb(n, 3) + 1)
            G = cons.random_3graph(n, m, seed)
            perm = list(range(n))
            rng.shuffle(perm)
            ordv = VertexOrder(tuple(perm))
            kernel = _kernels.longest_ordered_chain(n, list(G.edges),
                                                    list(ordv.position))
            assert kernel == brute_longest_chain(G, ordv)

    def test_dispatch_forced_pure(self, monkeypatch):
        monkeypatch.setenv("HYPERCHROME_PURE", "1")
        import importlib
        import hyperchrome._kernels as km
        importlib.reload(km)
        try:
            assert km.backend_name(5) == "pure"
        finally:
            monkeypatch.delenv("HYPERCHROME_PURE")
            importlib.reload(km)

    def test_dispatch_large_n_uses_pure(self):
        assert _kernels.backend_name(500) == "pure"
        status, best = _kernels.mis_search(100, [(0, 1, 2)])
        assert status == _kernels.FOUND and len(best) == 99
