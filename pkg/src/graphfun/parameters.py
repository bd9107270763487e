"""Degeneracy, degrees and neighbourhood algebra."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .graph import Graph


@dataclass(frozen=True)
class EliminationOrder:
    order: tuple[int, ...]
    peak: int


def degeneracy(g: Graph) -> EliminationOrder:
    """Min-degree peeling; ties go to the smallest index.

    ``peak`` is the largest degree seen at removal time, which equals the
    degeneracy.  The empty graph has peak 0.
    """
    n = g.n
    big = np.iinfo(np.int64).max // 2
    deg = g.degree_array.astype(np.int64).copy()
    order = []
    peak = 0
    for _ in range(n):
        v = int(np.argmin(deg))
        peak = max(peak, int(deg[v]))
        order.append(v)
        deg[g.neighbours(v)] -= 1
        deg[v] = big
    return EliminationOrder(tuple(order), peak)


def degrees(g: Graph) -> list[int]:
    return g.degree_array.tolist()


def max_degree(g: Graph) -> int:
    return int(g.degree_array.max()) if g.n else 0


def min_degree(g: Graph) -> int:
    return int(g.degree_array.min()) if g.n else 0


def _check_pair(g: Graph, u: int, v: int) -> None:
    if u == v:
        raise ValueError("u and v must be distinct")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("vertex out of range")


def common_neighbours(g: Graph, u: int, v: int) -> frozenset[int]:
    _check_pair(g, u, v)
    return frozenset(np.intersect1d(g.neighbours(u), g.neighbours(v), assume_unique=True).tolist())


def max_common_neighbours(g: Graph) -> int:
    """Largest ``|N(u) & N(v)|`` over distinct pairs (0 if n < 2)."""
    if g.n < 2:
        return 0
    adj = sp.csr_matrix(
        (np.ones(len(g.indices), dtype=np.int32), g.indices, g.indptr), shape=(g.n, g.n)
    )
    co = (adj @ adj).tocoo()
    off = co.row != co.col
    return int(co.data[off].max()) if off.any() else 0


def symmetric_difference(g: Graph, u: int, v: int) -> frozenset[int]:
    _check_pair(g, u, v)
    return frozenset(np.setxor1d(g.neighbours(u), g.neighbours(v), assume_unique=True).tolist())
