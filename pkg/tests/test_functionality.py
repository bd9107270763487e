import math
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphfun.errors import BudgetExceeded, SizeLimitExceeded
from graphfun.functionality import (
    FunctionalityWitness,
    brute_force_functionality,
    confusing_pair,
    distinguishing_set_from_probe,
    distinguishing_witness,
    extend_to_distinguishing,
    fun_upper_via_degeneracy,
    fun_upper_via_rep,
    graph_functionality_exact,
    is_distinguishing,
    is_function_of,
    is_function_of_transversal,
    rep_bound_params,
    repetition_number,
    verify_witness,
    vertex_functionality,
)
from graphfun.graph import Graph, complement, gen_gnp, induced_subgraph, named_family
from graphfun.parameters import degeneracy

from conftest import all_labelled_graphs, corpus, naive_fun, naive_is_function_of, naive_vertex_fun, random_forest

P4 = named_family("path", 4)
C4 = named_family("cycle", 4)
C5 = named_family("cycle", 5)
K3 = named_family("complete", 3)


def naive_rep(g: Graph, u) -> int:
    u = set(u)
    traces = {v: frozenset(g.neighbours(v).tolist()) & u for v in range(g.n) if v not in u}
    return sum(1 for v, t in traces.items() if any(t == t2 for w, t2 in traces.items() if w != v))


@st.composite
def graph_y_s(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph.from_edges(n, [e for e, b in zip(pairs, bits) if b])
    y = draw(st.integers(0, n - 1))
    s = draw(st.sets(st.integers(0, n - 1).filter(lambda v: v != y)))
    return g, y, frozenset(s)


class TestMembership:
    @pytest.mark.parametrize("check", [is_function_of, is_function_of_transversal])
    def test_examples(self, check):
        assert check(K3, 0, set())
        assert not check(P4, 1, set())
        assert check(C4, 0, {2})

    def test_p4_pair(self):
        assert confusing_pair(P4, 1, set()) == (0, 3)
        assert confusing_pair(P4, 1, {3}) is None

    def test_y_in_s_rejected(self):
        for check in (is_function_of, is_function_of_transversal):
            with pytest.raises(ValueError):
                check(P4, 1, {1, 2})

    def test_vacuous_when_few_outside(self):
        assert is_function_of(P4, 0, {1, 2})
        assert is_function_of(named_family("path", 2), 0, set())

    @given(graph_y_s())
    @settings(max_examples=400, deadline=None)
    def test_matches_definition(self, gys):
        g, y, s = gys
        expect = naive_is_function_of(g, y, s)
        assert is_function_of(g, y, s) == expect
        assert is_function_of_transversal(g, y, s) == expect

    def test_oracles_agree_exhaustively_n4(self):
        for g in all_labelled_graphs(4):
            for y in range(4):
                others = [v for v in range(4) if v != y]
                for k in range(4):
                    for s in combinations(others, k):
                        assert is_function_of(g, y, s) == is_function_of_transversal(g, y, s)

    def test_confusing_pair_is_genuine(self):
        rng = np.random.default_rng(1)
        for g in corpus(80, 9, seed=10):
            y = int(rng.integers(g.n))
            s = {v for v in range(g.n) if v != y and rng.random() < 0.3}
            pair = confusing_pair(g, y, s)
            if pair is None:
                assert naive_is_function_of(g, y, s)
                continue
            z1, z2 = pair
            assert g.has_edge(z1, y) and not g.has_edge(z2, y)
            assert {z1, z2}.isdisjoint(s | {y})
            trace = lambda z: frozenset(g.neighbours(z).tolist()) & s
            assert trace(z1) == trace(z2)


class TestVertexFunctionality:
    def test_universal_vertex(self):
        g = named_family("star", 6)
        assert vertex_functionality(g, 0) == (0, frozenset())

    def test_p4(self):
        value, s = vertex_functionality(P4, 1)
        assert value == 1 and is_function_of(P4, 1, s)
        assert is_function_of(P4, 1, {3})

    def test_c5(self):
        for y in range(5):
            value, s = vertex_functionality(C5, y)
            assert value == 2 and is_function_of(C5, y, s)
            assert is_function_of(C5, y, set(C5.neighbours(y).tolist()))

    def test_lexicographic_first_witness(self):
        # Among single vertices {0} fails and {2} is the first that works.
        assert vertex_functionality(P4, 1) == (1, frozenset({2}))

    def test_methods_agree_with_naive(self):
        for g in corpus(80, 8, seed=12):
            for y in range(g.n):
                v_enum, s_enum = vertex_functionality(g, y)
                v_hit, s_hit = vertex_functionality(g, y, method="hitting")
                assert v_enum == v_hit == naive_vertex_fun(g, y, range(g.n))
                assert is_function_of(g, y, s_enum) and is_function_of(g, y, s_hit)
                assert len(s_enum) == v_enum and len(s_hit) == v_hit

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            vertex_functionality(P4, 0, method="guess")


class TestGraphFunctionality:
    @pytest.mark.parametrize("n", range(0, 11))
    def test_complete(self, n):
        assert graph_functionality_exact(named_family("complete", n)).value == 0

    def test_golden(self):
        # Values frozen after agreement with the naive definitional oracle.
        for g, value in ((P4, 1), (C4, 1), (C5, 2)):
            assert naive_fun(g) == value
            assert graph_functionality_exact(g).value == value

    def test_empty_graph(self):
        res = graph_functionality_exact(named_family("empty", 0))
        assert res.value == 0

    def test_size_limit(self):
        with pytest.raises(SizeLimitExceeded):
            graph_functionality_exact(gen_gnp(13, 0.5, 0))
        assert graph_functionality_exact(gen_gnp(13, 0.5, 0), limit=13).value >= 0

    def test_matches_naive_oracle(self):
        for g in corpus(60, 6, seed=14):
            assert graph_functionality_exact(g).value == naive_fun(g)

    def test_matches_unpruned(self, small_corpus):
        for g in small_corpus[:150]:
            assert graph_functionality_exact(g).value == brute_force_functionality(g)

    def test_extremal_subgraph_and_witness(self, small_corpus):
        for g in small_corpus[:150]:
            res = graph_functionality_exact(g)
            if g.n == 0:
                continue
            h, mapping = induced_subgraph(g, res.subgraph)
            values = [vertex_functionality(h, y)[0] for y in range(h.n)]
            assert min(values) == res.value
            w = res.witness
            assert w.verified and w.y in res.subgraph and w.s <= res.subgraph
            assert len(w.s) == res.value
            assert is_function_of(h, mapping[w.y], {mapping[v] for v in w.s})

    def test_hereditary_max(self):
        rng = np.random.default_rng(15)
        for g in corpus(40, 9, seed=16):
            value = graph_functionality_exact(g).value
            for _ in range(5):
                sub = [v for v in range(g.n) if rng.random() < 0.6]
                if not sub:
                    continue
                h, _ = induced_subgraph(g, sub)
                assert min(vertex_functionality(h, y)[0] for y in range(h.n)) <= value

    def test_complement_invariance(self, small_corpus):
        for g in small_corpus:
            if g.n <= 7:
                assert graph_functionality_exact(g).value == graph_functionality_exact(complement(g)).value

    def test_bounded_by_degeneracy(self, small_corpus):
        for g in small_corpus:
            assert graph_functionality_exact(g).value <= fun_upper_via_degeneracy(g) == degeneracy(g).peak

    def test_forests(self):
        rng = np.random.default_rng(17)
        for _ in range(100):
            g = random_forest(rng, int(rng.integers(1, 11)))
            assert graph_functionality_exact(g).value <= 1

    def test_hypercube(self):
        q3 = named_family("hypercube", 3)
        assert graph_functionality_exact(q3).value == brute_force_functionality(q3)


class TestRepetition:
    def test_empty_set(self):
        assert repetition_number(P4, set()) == 4

    def test_p4_single(self):
        assert repetition_number(P4, {1}) == 2

    def test_full_set(self):
        assert repetition_number(C5, range(5)) == 0

    @given(graph_y_s(max_n=9))
    @settings(max_examples=200, deadline=None)
    def test_matches_naive(self, gys):
        g, _, u = gys
        assert repetition_number(g, u) == naive_rep(g, u)

    def test_monotone_under_induced_subgraphs(self):
        rng = np.random.default_rng(18)
        for g in corpus(60, 10, seed=19):
            u = {v for v in range(g.n) if rng.random() < 0.3}
            base = repetition_number(g, u)
            for _ in range(5):
                w = u | {v for v in range(g.n) if rng.random() < 0.5}
                h, mapping = induced_subgraph(g, w)
                assert repetition_number(h, {mapping[v] for v in u}) <= base

    def test_is_distinguishing_examples(self):
        assert is_distinguishing(P4, {1, 2})
        assert not is_distinguishing(named_family("empty", 3), {0})
        assert is_distinguishing(C5, {0, 1, 2, 3})

    def test_extend_examples(self):
        assert extend_to_distinguishing(P4, {1, 2}) == {1, 2}
        assert extend_to_distinguishing(named_family("empty", 3), set()) == {0, 1, 2}
        assert extend_to_distinguishing(named_family("star", 4), {0}) == {0, 1, 2, 3}
        assert extend_to_distinguishing(named_family("complete", 4), {0}) == {0, 1, 2, 3}

    @given(graph_y_s(max_n=10))
    @settings(max_examples=150, deadline=None)
    def test_extend_properties(self, gys):
        g, _, u = gys
        s = extend_to_distinguishing(g, u)
        assert u <= s and is_distinguishing(g, s)
        assert len(s - u) == repetition_number(g, u)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            repetition_number(P4, {7})


class TestUpperBounds:
    def test_rep_examples(self):
        assert fun_upper_via_rep(named_family("complete", 4), 0) == 4
        assert fun_upper_via_rep(named_family("empty", 5), 1) == 5

    def test_rep_p4_k2(self):
        # Every 2-set already separates the two outside vertices.
        reps = [naive_rep(P4, u) for u in combinations(range(4), 2)]
        assert reps == [0] * 6
        assert fun_upper_via_rep(P4, 2) == 2 >= graph_functionality_exact(P4).value

    def test_rep_budget(self):
        with pytest.raises(BudgetExceeded):
            fun_upper_via_rep(gen_gnp(40, 0.5, 0), 5, budget=1000)
        with pytest.raises(ValueError):
            fun_upper_via_rep(P4, 5)

    def test_rep_bounds_fun(self, small_corpus):
        for g in small_corpus:
            value = graph_functionality_exact(g).value
            for k in (0, 1, 2):
                if k <= g.n:
                    assert value <= fun_upper_via_rep(g, k)

    def test_degeneracy_examples(self):
        assert fun_upper_via_degeneracy(C5) == 2
        assert fun_upper_via_degeneracy(named_family("path", 7)) == 1
        k6 = named_family("complete", 6)
        assert fun_upper_via_degeneracy(k6) == 5 and graph_functionality_exact(k6).value == 0

    def test_rep_bound_params(self):
        params = rep_bound_params(1000, 0.5)
        assert params.k == math.floor(3 * math.log(1000) / 0.5) == 41
        assert params.r == pytest.approx(7 * math.log(1000) / 0.5)


class TestDistinguishingProbe:
    def test_small_n_takes_everything(self):
        res = distinguishing_set_from_probe(C5, 0.5)
        assert res.probe_size == 5 and res.vertices == frozenset(range(5))

    def test_random_instance(self):
        g = gen_gnp(1000, 0.5, 3)
        res = distinguishing_set_from_probe(g, 0.5)
        assert is_distinguishing(g, res.vertices)
        assert res.probe_size == 41
        assert res.vertices >= frozenset(range(41))
        assert res.target == pytest.approx(10 * math.log(1000) / 0.5)

    def test_preconditions(self):
        with pytest.raises(ValueError):
            distinguishing_set_from_probe(C5, 0.7)
        with pytest.raises(ValueError):
            distinguishing_set_from_probe(C5, 0.0)
        with pytest.raises(ValueError):
            distinguishing_set_from_probe(named_family("empty", 1), 0.5)

    def test_distinguishing_set_gives_witness(self):
        for g in corpus(40, 9, seed=20):
            if g.n < 2:
                continue
            s = extend_to_distinguishing(g, {0})
            w = distinguishing_witness(g, s)
            if w is not None:
                assert w.verified and is_function_of(g, w.y, w.s)


class TestWitness:
    def test_verify_witness(self):
        good = verify_witness(P4, FunctionalityWitness(1, frozenset({3}), "exact-search"))
        assert good.verified and good.size == 1
        with pytest.raises(ValueError):
            verify_witness(P4, FunctionalityWitness(1, frozenset(), "exact-search"))

    def test_bad_fields(self):
        with pytest.raises(ValueError):
            FunctionalityWitness(1, frozenset(), "magic")
        with pytest.raises(ValueError):
            FunctionalityWitness(1, frozenset({1}), "exact-search")
