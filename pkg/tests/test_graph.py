import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphfun.graph import (
    BITSET_THRESHOLD,
    BipartiteGraph,
    DuplicateEdgeError,
    Graph,
    GraphFormatError,
    HeaderError,
    SelfLoopError,
    VertexRangeError,
    complement,
    gen_bipartite,
    gen_gnp,
    induced_subgraph,
    named_family,
    pair_uniform,
    read_bipartite,
    read_edge_list,
    write_bipartite,
    write_edge_list,
)

from conftest import reference_gnp_edges


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, c in zip(pairs, chosen) if c])


class TestGnp:
    def test_p_zero_is_edgeless(self):
        g = gen_gnp(5, 0.0, 123)
        assert g.n == 5 and g.m == 0

    def test_p_one_is_complete(self):
        assert gen_gnp(4, 1.0, 99) == named_family("complete", 4)

    def test_large_edge_count_band(self):
        g = gen_gnp(1000, 0.5, 7)
        pairs = math.comb(1000, 2)
        assert abs(g.m - pairs / 2) <= 4 * math.sqrt(pairs / 4)

    def test_large_instance_agrees_with_pair_lookup(self):
        g = gen_gnp(1000, 0.5, 7)
        rng = np.random.default_rng(0)
        for _ in range(500):
            u, v = sorted(rng.choice(1000, size=2, replace=False).tolist())
            rank = u * (2 * 1000 - u - 1) // 2 + (v - u - 1)
            assert g.has_edge(u, v) == (pair_uniform(7, rank) < 0.5)

    @pytest.mark.parametrize("n,p,seed", [(0, 0.5, 1), (1, 0.5, 1), (2, 0.5, 3), (17, 0.3, 5), (64, 0.1, 11), (64, 0.7, 2**63)])
    def test_matches_reference_sampler(self, n, p, seed):
        assert gen_gnp(n, p, seed).edge_set() == reference_gnp_edges(n, p, seed)

    @given(st.integers(0, 40), st.floats(0, 1), st.integers(0, 2**64 - 1))
    @settings(max_examples=50, deadline=None)
    def test_deterministic(self, n, p, seed):
        assert gen_gnp(n, p, seed) == gen_gnp(n, p, seed)

    def test_rejects_bad_p(self):
        with pytest.raises(ValueError):
            gen_gnp(3, 1.5, 0)
        with pytest.raises(ValueError):
            gen_gnp(3, -0.1, 0)


class TestBipartite:
    def test_complete_and_empty(self):
        k33 = gen_bipartite(3, 3, 1.0, 0)
        assert k33.m == 9
        assert all(len(row) == 3 for row in k33.adjacency)
        assert gen_bipartite(3, 3, 0.0, 0).m == 0

    def test_edge_count_band(self):
        bg = gen_bipartite(100, 1000, 0.01, 1)
        assert abs(bg.m - 1000) <= 4 * math.sqrt(990)

    def test_matches_pair_lookup(self):
        a, b, p, seed = 7, 9, 0.4, 21
        bg = gen_bipartite(a, b, p, seed)
        for i in range(a):
            for j in range(b):
                assert (j in bg.adjacency[i]) == (pair_uniform(seed, i * b + j) < p)

    def test_masks_are_transposes(self):
        bg = gen_bipartite(6, 11, 0.5, 4)
        for i in range(6):
            for j in range(11):
                assert (bg.a_masks[i] >> j & 1) == (bg.b_masks[j] >> i & 1)

    def test_round_trip(self):
        bg = gen_bipartite(5, 8, 0.5, 3)
        assert read_bipartite(write_bipartite(bg)) == bg


class TestComplement:
    def test_examples(self):
        assert complement(named_family("complete", 4)) == named_family("empty", 4)
        assert complement(named_family("empty", 3)) == named_family("complete", 3)

    def test_c5_self_complementary(self):
        c5 = complement(named_family("cycle", 5))
        assert c5.m == 5 and all(c5.degree(v) == 2 for v in range(5))
        # The complement of 0-1-2-3-4-0 is the cycle 0-2-4-1-3-0.
        assert c5.edge_set() == {(0, 2), (2, 4), (1, 4), (1, 3), (0, 3)}

    @given(graphs())
    @settings(max_examples=100, deadline=None)
    def test_involution(self, g):
        assert complement(complement(g)) == g

    @given(graphs())
    @settings(max_examples=50, deadline=None)
    def test_edges_partition_pairs(self, g):
        c = complement(g)
        assert g.m + c.m == g.n * (g.n - 1) // 2
        assert not g.edge_set() & c.edge_set()

    def test_above_bitset_threshold(self):
        n = BITSET_THRESHOLD + 10
        g = Graph.from_edges(n, [(0, 1), (5, n - 1)])
        c = complement(g)
        assert g.bitset_rows is None
        assert c.m == n * (n - 1) // 2 - 2
        assert not c.has_edge(0, 1) and not c.has_edge(5, n - 1) and c.has_edge(0, 2)


class TestInducedSubgraph:
    def test_cycle_prefix_is_path(self):
        h, mapping = induced_subgraph(named_family("cycle", 5), {0, 1, 2})
        assert h == named_family("path", 3)
        assert mapping == {0: 0, 1: 1, 2: 2}

    def test_full_set_is_identity(self):
        g = gen_gnp(9, 0.5, 1)
        h, mapping = induced_subgraph(g, range(9))
        assert h == g and mapping == {v: v for v in range(9)}

    def test_two_vertices_of_k5(self):
        h, mapping = induced_subgraph(named_family("complete", 5), {1, 3})
        assert h.n == 2 and h.edge_set() == {(0, 1)}
        assert mapping == {1: 0, 3: 1}

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            induced_subgraph(named_family("path", 3), {0, 3})

    @given(graphs(), st.data())
    @settings(max_examples=60, deadline=None)
    def test_adjacency_preserved(self, g, data):
        u = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
        h, mapping = induced_subgraph(g, u)
        for a in u:
            for b in u:
                if a != b:
                    assert h.has_edge(mapping[a], mapping[b]) == g.has_edge(a, b)


class TestFamilies:
    def test_cycle4(self):
        assert named_family("cycle", 4).edge_set() == {(0, 1), (1, 2), (2, 3), (0, 3)}

    def test_hypercube3(self):
        q3 = named_family("hypercube", 3)
        assert q3.n == 8 and q3.m == 12
        assert all(q3.degree(v) == 3 for v in range(8))

    def test_star4(self):
        s = named_family("star", 4)
        assert s.n == 4 and s.degree(0) == 3
        assert [s.degree(v) for v in (1, 2, 3)] == [1, 1, 1]

    def test_unknown(self):
        with pytest.raises(ValueError):
            named_family("wheel", 5)


class TestEdgeListFormat:
    def test_path3(self):
        assert read_edge_list("3 2\n0 1\n1 2") == named_family("path", 3)

    def test_edgeless(self):
        g = read_edge_list("2 0")
        assert g.n == 2 and g.m == 0

    def test_self_loop(self):
        with pytest.raises(SelfLoopError) as exc:
            read_edge_list("3 1\n2 2")
        assert exc.value.line == 2

    @pytest.mark.parametrize(
        "text,kind,line",
        [
            ("", HeaderError, 1),
            ("3\n", HeaderError, 1),
            ("x 1\n0 1", HeaderError, 1),
            ("3 1\n0 3", VertexRangeError, 2),
            ("3 2\n0 1\n0 1", DuplicateEdgeError, 3),
            ("3 1\n1 0", GraphFormatError, 2),
            ("3 2\n0 1", HeaderError, 1),
        ],
    )
    def test_errors_are_distinct(self, text, kind, line):
        with pytest.raises(kind) as exc:
            read_edge_list(text)
        assert isinstance(exc.value, GraphFormatError)
        if line is not None:
            assert exc.value.line == line

    @given(graphs(max_n=15))
    @settings(max_examples=100, deadline=None)
    def test_round_trip(self, g):
        assert read_edge_list(write_edge_list(g)) == g

    def test_bipartite_range_error(self):
        with pytest.raises(VertexRangeError):
            read_bipartite("2 2 1\n0 2")

    def test_bipartite_from_edges(self):
        bg = BipartiteGraph.from_edges(2, 3, [(0, 2), (1, 0)])
        assert bg.adjacency == ((2,), (0,))
