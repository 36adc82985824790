import math
import random

import pytest

from hyperchrome import constructions as cons
from hyperchrome import extremal as ext
from hyperchrome.cache import ResultCache, ResultRecord, decode_graph, encode_graph
from hyperchrome.containment import embedding_ok, is_free
from hyperchrome.core import canonical_form, new_hypergraph
from hyperchrome.exact import SearchBudget, independence_number

from oracles import brute_turan_ex

LP = cons.named("linear_pair")


class TestFindEdgeOrdering:
    def test_linear_pair(self):
        eo = ext.find_edge_ordering(LP)
        assert eo is not None
        assert eo.order == ((0, 1, 2), (0, 1, 3))
        assert eo.anchors == ((0, (0, 1), 3),)

    def test_single_edge_trivial(self):
        H = new_hypergraph(3, 3, [(0, 1, 2)])
        eo = ext.find_edge_ordering(H)
        assert eo is not None and len(eo.order) == 1 and eo.anchors == ()

    def test_size_condition_violated(self):
        with pytest.raises(ValueError):
            ext.find_edge_ordering(cons.loose_path(2))  # 5 vertices, 2 edges

    def test_orderable_triple_star(self):
        H = new_hypergraph(5, 3, [(0, 1, 2), (0, 1, 3), (0, 1, 4)])
        eo = ext.find_edge_ordering(H)
        assert eo is not None and len(eo.order) == 3

    def test_unorderable_shape(self):
        # every start strands the pair (2,4) outside earlier edges
        H = new_hypergraph(5, 3, [(0, 1, 2), (2, 3, 4), (0, 1, 4)])
        assert ext.find_edge_ordering(H) is None

    def test_isolated_vertex_blocks(self):
        # sizes match but vertex 4 is isolated, so no ordering reaches it
        H = new_hypergraph(5, 3, [(0, 1, 2), (0, 1, 3), (0, 2, 3)])
        assert ext.find_edge_ordering(H) is None


class TestPruneLowSupport:
    def test_k6_unchanged(self):
        G = cons.complete(6)
        assert ext.prune_low_support(G, 4).edges == G.edges

    def test_single_edge_emptied(self):
        G = new_hypergraph(3, 3, [(0, 1, 2)])
        assert ext.prune_low_support(G, 4).edges == ()

    def test_idempotent(self):
        for seed in range(20):
            rng = random.Random(seed)
            n = rng.randrange(4, 8)
            m = rng.randrange(0, math.comb(n, 3) + 1)
            G = cons.random_3graph(n, m, seed)
            once = ext.prune_low_support(G, 4)
            twice = ext.prune_low_support(once, 4)
            assert once.edges == twice.edges

    def test_pair_support_postcondition(self):
        from itertools import combinations
        for seed in range(15):
            G = cons.random_3graph(7, 20 + seed, 70 + seed)
            t = 4
            pruned = ext.prune_low_support(G, t)
            support = {}
            for e in pruned.edges:
                for p in combinations(e, 2):
                    support[p] = support.get(p, 0) + 1
            assert all(v >= t - 2 for v in support.values())


class TestEmbedByEdgeOrder:
    def test_k6_linear_pair(self):
        eo = ext.find_edge_ordering(LP)
        emb = ext.embed_by_edge_order(cons.complete(6), LP, eo)
        assert emb is not None and embedding_ok(cons.complete(6), LP, emb)

    def test_sparse_graph_none(self):
        eo = ext.find_edge_ordering(LP)
        G = new_hypergraph(5, 3, [(0, 1, 2)])
        assert ext.embed_by_edge_order(G, LP, eo) is None

    def test_guaranteed_when_dense(self):
        eo = ext.find_edge_ordering(LP)
        for i in range(60):
            rng = random.Random(4000 + i)
            n = rng.choice([6, 7])
            lo = math.comb(n, 2) + 1
            G = cons.random_3graph(n, rng.randrange(lo, math.comb(n, 3) + 1),
                                   5000 + i)
            emb = ext.embed_by_edge_order(G, LP, eo)
            assert emb is not None and embedding_ok(G, LP, emb)


class TestTuranEx:
    def test_small_values(self):
        assert ext.turan_ex(4, LP).value == 1
        assert ext.turan_ex(5, LP).value == 2

    def test_against_bruteforce(self):
        for n in (4, 5):
            assert ext.turan_ex(n, LP).value == brute_turan_ex(n, LP)

    def test_six(self):
        rec = ext.turan_ex(6, LP)
        assert rec.value == 4 and rec.status == "exact"
        assert is_free(rec.witness, LP) and len(rec.witness.edges) == 4

    def test_monotone(self):
        assert ext.turan_ex(4, LP).value <= ext.turan_ex(5, LP).value \
            <= ext.turan_ex(6, LP).value

    def test_ordering_bound_cross_check(self):
        # ex(n, H) <= (t-3) C(n,2) whenever an edge ordering exists
        t = LP.n
        for n in (4, 5, 6):
            assert ext.turan_ex(n, LP).value <= (t - 3) * math.comb(n, 2)

    def test_budget_gives_lower_bound(self):
        rec = ext.turan_ex(7, LP, SearchBudget(max_nodes=2))
        assert rec.status == "lower_bound"
        assert rec.value <= 7
        assert is_free(rec.witness, LP)


class TestRamsey:
    def test_single_edge(self):
        H = new_hypergraph(3, 3, [(0, 1, 2)])
        rec = ext.ramsey(H, 3, 6)
        assert rec.value == 3 and rec.status == "exact"

    def test_linear_pair_t3(self):
        rec = ext.ramsey(LP, 3, 6)
        assert rec.value == 4 and rec.status == "exact"
        assert rec.witness.n == 3 and rec.witness.edges == ((0, 1, 2),)

    def test_linear_pair_t4(self):
        rec = ext.ramsey(LP, 4, 7)
        assert rec.value == 5 and rec.status == "exact"
        assert is_free(rec.witness, LP)
        assert independence_number(rec.witness) <= 3

    def test_witness_revalidates(self):
        rec = ext.ramsey(LP, 3, 6)
        assert is_free(rec.witness, LP)
        assert independence_number(rec.witness) <= 2

    def test_nmax_reached(self):
        rec = ext.ramsey(LP, 4, 3)
        assert rec.status == "lower_bound" and rec.value == 4

    def test_requires_edges(self):
        with pytest.raises(ValueError):
            ext.ramsey(new_hypergraph(3, 3, []), 3, 5)


class TestVerifyWitness:
    def test_fano_linear_pair(self):
        wr = ext.verify_witness(cons.named("fano"), LP, 2)
        assert wr.h_free and wr.chi == 3 and wr.chi_exceeds_r
        assert wr.implied_bound == 7

    def test_vacuous_freeness(self):
        wr = ext.verify_witness(cons.complete(5), cons.named("sunflower7"), 2)
        assert wr.h_free and wr.chi == 3 and wr.implied_bound == 10

    def test_loose_cycle_no_bound(self):
        wr = ext.verify_witness(cons.loose_cycle(3), LP, 2)
        assert wr.h_free and wr.chi == 2 and not wr.chi_exceeds_r
        assert wr.implied_bound is None

    def test_exhausted_in_band(self):
        wr = ext.verify_witness(cons.complete(9), LP, 2,
                                SearchBudget(max_nodes=2))
        assert wr.status == "exhausted" and wr.chi is None


class TestCache:
    def test_roundtrip(self, tmp_path):
        path = str(tmp_path / "cache.txt")
        cache = ResultCache(path)
        rec = ext.turan_ex(5, LP, cache=cache)
        fresh = ResultCache(path)
        got = fresh.get("ex", rec.key, 5)
        assert got is not None and got.value == rec.value
        assert got.witness.edges == rec.witness.edges

    def test_cached_result_reused_and_coherent(self, tmp_path):
        path = str(tmp_path / "cache.txt")
        cache = ResultCache(path)
        first = ext.turan_ex(6, LP, cache=cache)
        again = ext.turan_ex(6, LP, cache=ResultCache(path))
        assert again.value == first.value
        assert canonical_form(again.witness) == canonical_form(first.witness)

    def test_corrupt_line_evicted(self, tmp_path):
        path = str(tmp_path / "cache.txt")
        cache = ResultCache(path)
        ext.turan_ex(4, LP, cache=cache)
        with open(path, "a", encoding="utf-8") as fh:
            fh.write("garbage line without tabs\n")
            fh.write("ex\tbroken\tnot_an_int\t1\texact\t3:3:\n")
        fresh = ResultCache(path)
        assert len(fresh.records) == 1

    def test_lying_witness_recomputed(self, tmp_path):
        path = str(tmp_path / "cache.txt")
        cache = ResultCache(path)
        key = canonical_form(LP).decode()
        bogus = ResultRecord("ex", key, 4, 3, "exact",
                             new_hypergraph(4, 3, [(0, 1, 2), (0, 1, 3),
                                                   (0, 2, 3)]))
        cache.put(bogus)
        rec = ext.turan_ex(4, LP, cache=ResultCache(path))
        assert rec.value == 1

    def test_graph_encoding_roundtrip(self):
        G = cons.loose_cycle(3)
        assert decode_graph(encode_graph(G)).edges == G.edges
