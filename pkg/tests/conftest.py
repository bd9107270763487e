"""Shared corpora and slow-but-obvious reference implementations."""

from __future__ import annotations

from itertools import combinations

import numpy as np
import pytest

from graphfun.graph import Graph, pair_uniform


def naive_is_function_of(g: Graph, y: int, s) -> bool:
    s = set(s)
    nbr = [set(g.neighbours(v).tolist()) for v in range(g.n)]
    outside = [z for z in range(g.n) if z != y and z not in s]
    for z1 in outside:
        for z2 in outside:
            if nbr[z1] & s == nbr[z2] & s and (y in nbr[z1]) != (y in nbr[z2]):
                return False
    return True


def naive_vertex_fun(g: Graph, y: int, verts) -> int:
    verts = sorted(verts)
    h = Graph.from_edges(
        len(verts),
        [(i, j) for i, j in combinations(range(len(verts)), 2) if g.has_edge(verts[i], verts[j])],
    )
    yi = verts.index(y)
    others = [v for v in range(h.n) if v != yi]
    for size in range(len(others) + 1):
        for s in combinations(others, size):
            if naive_is_function_of(h, yi, s):
                return size
    raise AssertionError("unreachable: N(y) always works")


def naive_fun(g: Graph) -> int:
    best = 0
    for size in range(1, g.n + 1):
        for verts in combinations(range(g.n), size):
            best = max(best, min(naive_vertex_fun(g, y, verts) for y in verts))
    return best


def reference_gnp_edges(n: int, p: float, seed: int) -> set[tuple[int, int]]:
    """One pair at a time in lexicographic rank order."""
    out = set()
    rank = 0
    for u in range(n):
        for v in range(u + 1, n):
            if pair_uniform(seed, rank) < p:
                out.add((u, v))
            rank += 1
    return out


def random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def all_labelled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for i, e in enumerate(pairs) if code >> i & 1])


def random_forest(rng: np.random.Generator, n: int) -> Graph:
    edges = []
    for v in range(1, n):
        if rng.random() < 0.8:
            edges.append((int(rng.integers(v)), v))
    return Graph.from_edges(n, edges)


def corpus(count: int, max_n: int, seed: int) -> list[Graph]:
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(1, max_n + 1))
        p = float(rng.choice([0.1, 0.25, 0.5, 0.75, 0.9]))
        out.append(random_graph(rng, n, p))
    return out


@pytest.fixture(scope="session")
def small_corpus() -> list[Graph]:
    return corpus(300, 9, seed=2024)
