"""Functionality of vertices and graphs.

A vertex ``y`` is a *function of* a set ``S`` (``y`` not in ``S``) when no two
vertices outside ``S | {y}`` have the same neighbourhood trace on ``S`` while
disagreeing on adjacency to ``y``.  ``fun(y)`` is the smallest such ``|S|`` and
``fun(G)`` is the maximum over nonempty induced subgraphs ``H`` of
``min_y fun_H(y)``.

Exact routines work on bitmask rows and are meant for graphs on at most a
dozen vertices; the bounds work at any size.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from itertools import combinations
from typing import Iterable, Sequence

from .errors import BudgetExceeded, SizeLimitExceeded
from .graph import BITSET_THRESHOLD, Graph
from .parameters import degeneracy

EXACT_LIMIT = 12
REP_BUDGET = 10**7

PROVENANCES = ("neighbourhood", "distinguishing", "domination", "exact-search")


@dataclass(frozen=True)
class FunctionalityWitness:
    """Claim that ``y`` is a function of ``s``; ``verified`` once checked."""

    y: int
    s: frozenset[int]
    provenance: str
    verified: bool = False

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        if self.y in self.s:
            raise ValueError("y must not belong to s")

    @property
    def size(self) -> int:
        return len(self.s)


@dataclass(frozen=True)
class RepBoundParams:
    k: int
    r: float


def verify_witness(g: Graph, w: FunctionalityWitness) -> FunctionalityWitness:
    """Return ``w`` marked verified; raise ``ValueError`` if it is unsound."""
    if not is_function_of(g, w.y, w.s):
        raise ValueError(f"vertex {w.y} is not a function of the given set")
    return replace(w, verified=True)


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << int(v)
    return m


def mask_to_set(mask: int) -> frozenset[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _check_y_s(g: Graph, y: int, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(int(v) for v in s)
    if not 0 <= y < g.n:
        raise ValueError(f"vertex {y} out of range")
    if y in s:
        raise ValueError(f"y={y} must not belong to S")
    if any(not 0 <= v < g.n for v in s):
        raise ValueError("S contains an out-of-range vertex")
    return s


def _trace_keys(g: Graph, s: frozenset[int]) -> list:
    """Hashable ``N(v) & s`` for every vertex ``v``."""
    if g.n <= BITSET_THRESHOLD:
        sm = to_mask(s)
        return [row & sm for row in g.masks]
    import numpy as np

    arr = np.fromiter(sorted(s), dtype=np.int64, count=len(s))
    return [
        tuple(np.intersect1d(g.neighbours(v), arr, assume_unique=True).tolist()) for v in range(g.n)
    ]


def _confusing_pair_masks(masks: Sequence[int], verts: int, y: int, smask: int) -> tuple[int, int] | None:
    """First ``(z1, z2)`` breaking "y is a function of smask" inside ``verts``.

    ``z1`` is the adjacent vertex.  Scans ``z`` in ascending order and pairs
    each vertex with the earliest vertex of the opposite kind sharing its trace.
    """
    ny = masks[y]
    seen_adj: dict[int, int] = {}
    seen_non: dict[int, int] = {}
    rest = verts & ~smask & ~(1 << y)
    while rest:
        low = rest & -rest
        z = low.bit_length() - 1
        rest ^= low
        key = masks[z] & smask
        if ny & low:
            if key in seen_non:
                return z, seen_non[key]
            seen_adj.setdefault(key, z)
        else:
            if key in seen_adj:
                return seen_adj[key], z
            seen_non.setdefault(key, z)
    return None


def confusing_pair(g: Graph, y: int, s: Iterable[int]) -> tuple[int, int] | None:
    """A pair ``(z1, z2)`` showing ``y`` is not a function of ``s``, or None.

    ``z1`` is adjacent to ``y``, ``z2`` is not, and both have the same trace on
    ``s``.
    """
    s = _check_y_s(g, y, s)
    if g.n <= BITSET_THRESHOLD:
        return _confusing_pair_masks(g.masks, (1 << g.n) - 1, y, to_mask(s))
    keys = _trace_keys(g, s)
    ny = set(g.neighbours(y).tolist())
    seen_adj: dict = {}
    seen_non: dict = {}
    for z in range(g.n):
        if z == y or z in s:
            continue
        if z in ny:
            if keys[z] in seen_non:
                return z, seen_non[keys[z]]
            seen_adj.setdefault(keys[z], z)
        else:
            if keys[z] in seen_adj:
                return seen_adj[keys[z]], z
            seen_non.setdefault(keys[z], z)
    return None


def is_function_of(g: Graph, y: int, s: Iterable[int]) -> bool:
    return confusing_pair(g, y, s) is None


def is_function_of_transversal(g: Graph, y: int, s: Iterable[int]) -> bool:
    """Hypergraph formulation: ``s`` must meet ``(N(u1) ^ N(u2)) | {u1, u2}``
    for every neighbour ``u1`` and non-neighbour ``u2 != y`` of ``y``.

    Written independently of :func:`is_function_of` so the two can cross-check.
    """
    s = _check_y_s(g, y, s)
    nbrs = [frozenset(g.neighbours(v).tolist()) for v in range(g.n)]
    ny = nbrs[y]
    non = [u for u in range(g.n) if u != y and u not in ny]
    for u1 in sorted(ny):
        for u2 in non:
            edge = (nbrs[u1] ^ nbrs[u2]) | {u1, u2}
            if not (edge & s):
                return False
    return True


def hyperedges(g: Graph, y: int) -> list[int]:
    """Hyperedges of the transversal formulation as bitmasks (``y`` removed)."""
    masks = g.masks
    ny = masks[y]
    full = (1 << g.n) - 1
    non = full & ~ny & ~(1 << y)
    out = []
    for u1 in _bits(ny):
        for u2 in _bits(non):
            out.append(((masks[u1] ^ masks[u2]) | 1 << u1 | 1 << u2) & ~(1 << y))
    return out


# --------------------------------------------------------------------------
# Exact per-vertex functionality.


def _witness_at_most(masks: Sequence[int], verts: int, y: int, bound: int) -> int | None:
    """Lex-first smallest ``S`` within ``verts`` of size <= bound, as a mask."""
    others = _bits(verts & ~(1 << y))
    for k in range(0, min(bound, len(others)) + 1):
        for combo in combinations(others, k):
            sm = 0
            for v in combo:
                sm |= 1 << v
            if _confusing_pair_masks(masks, verts, y, sm) is None:
                return sm
    return None


def _trivial_bound(masks: Sequence[int], verts: int, y: int) -> int:
    d = (masks[y] & verts).bit_count()
    return min(d, verts.bit_count() - 1 - d)


def _min_hitting_set(edges: list[int], best_mask: int) -> int:
    """Minimum transversal by branch and bound; ``best_mask`` is a known one."""
    edges = sorted(set(edges), key=lambda e: (e.bit_count(), e))
    # Drop supersets: hitting the smaller edge is necessary anyway.
    kept: list[int] = []
    for e in edges:
        if not any(f & e == f for f in kept):
            kept.append(e)
    best = [best_mask.bit_count(), best_mask]

    def lower(unhit: list[int]) -> int:
        # Greedy packing of pairwise-disjoint edges.
        used = 0
        count = 0
        for e in unhit:
            if not e & used:
                used |= e
                count += 1
        return count

    def go(chosen: int, size: int, unhit: list[int]) -> None:
        if not unhit:
            if size < best[0]:
                best[0], best[1] = size, chosen
            return
        if size + lower(unhit) >= best[0]:
            return
        pivot = unhit[0]
        for v in _bits(pivot):
            bit = 1 << v
            go(chosen | bit, size + 1, [e for e in unhit if not e & bit])
            pivot_excl = bit
            # Later branches may assume v is excluded.
            unhit = [e & ~pivot_excl if e != pivot else e for e in unhit]
            if any(e == 0 for e in unhit):
                return

    go(0, 0, kept)
    return best[1]


def vertex_functionality_hitting(g: Graph, y: int) -> tuple[int, frozenset[int]]:
    """``fun(y)`` through a minimum transversal of the hyperedges of ``y``."""
    if not 0 <= y < g.n:
        raise ValueError(f"vertex {y} out of range")
    masks = g.masks
    full = (1 << g.n) - 1
    ny = masks[y]
    non = full & ~ny & ~(1 << y)
    start = ny if ny.bit_count() <= non.bit_count() else non
    edges = hyperedges(g, y)
    if not edges:
        return 0, frozenset()
    sol = _min_hitting_set(edges, start)
    return sol.bit_count(), mask_to_set(sol)


def vertex_functionality(g: Graph, y: int, method: str = "enumerate") -> tuple[int, frozenset[int]]:
    """Smallest ``|S|`` with ``y`` a function of ``S``, plus such an ``S``.

    ``method="enumerate"`` scans sets by size then lexicographically and returns
    the first success; ``"hitting"`` solves the transversal problem by branch
    and bound (same value, possibly a different minimal set).
    """
    if method == "hitting":
        return vertex_functionality_hitting(g, y)
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    if not 0 <= y < g.n:
        raise ValueError(f"vertex {y} out of range")
    masks = g.masks
    verts = (1 << g.n) - 1
    sm = _witness_at_most(masks, verts, y, _trivial_bound(masks, verts, y))
    assert sm is not None
    return sm.bit_count(), mask_to_set(sm)


@dataclass(frozen=True)
class ExactFunctionality:
    value: int
    subgraph: frozenset[int]
    witness: FunctionalityWitness | None


def _subgraph_min(masks: Sequence[int], verts: int, at_most: int | None):
    """Scan ``H = verts``.  With ``at_most`` set, return ``None`` as soon as some
    vertex has ``fun_H <= at_most``; otherwise return ``(value, y, S)``."""
    order = sorted(_bits(verts), key=lambda y: (_trivial_bound(masks, verts, y), y))
    if at_most is not None:
        for y in order:
            if _trivial_bound(masks, verts, y) <= at_most:
                return None
            if _witness_at_most(masks, verts, y, at_most) is not None:
                return None
    low = (at_most + 1) if at_most is not None else 0
    best = None
    for y in order:
        cap = _trivial_bound(masks, verts, y)
        if best is not None:
            cap = min(cap, best[0] - 1)
        if cap < low:
            continue
        # Sizes below ``low`` were already ruled out for every vertex.
        sm = _witness_from(masks, verts, y, low, cap)
        if sm is not None:
            best = (sm.bit_count(), y, sm)
            if best[0] == low:
                break
    assert best is not None
    return best


def _witness_from(masks, verts, y, lo, hi):
    others = _bits(verts & ~(1 << y))
    for k in range(lo, min(hi, len(others)) + 1):
        for combo in combinations(others, k):
            sm = 0
            for v in combo:
                sm |= 1 << v
            if _confusing_pair_masks(masks, verts, y, sm) is None:
                return sm
    return None


def graph_functionality_exact(g: Graph, limit: int = EXACT_LIMIT) -> ExactFunctionality:
    """Exact ``fun(g)`` by enumerating induced subgraphs with pruning.

    Subgraphs are visited by decreasing size, lexicographically within a size.
    A subgraph is skipped when ``(|H|-1)//2`` cannot beat the current best or
    when some vertex already has ``fun_H`` at most the current best.  The
    returned subgraph is the first one found attaining the maximum, with a
    minimal witness for its minimising vertex.
    """
    n = g.n
    if n > limit:
        raise SizeLimitExceeded(f"exact functionality refused for n={n} > {limit}")
    if n == 0:
        return ExactFunctionality(0, frozenset(), None)
    masks = g.masks
    best_val = 0
    best_h = (1 << n) - 1
    best_w = None
    for size in range(n, 2, -1):
        if (size - 1) // 2 <= best_val:
            break
        for combo in combinations(range(n), size):
            verts = 0
            for v in combo:
                verts |= 1 << v
            res = _subgraph_min(masks, verts, best_val)
            if res is None:
                continue
            best_val, y, sm = res
            best_h = verts
            best_w = (y, sm)
            if (size - 1) // 2 <= best_val:
                break
    if best_w is None:
        val, y, sm = _subgraph_min(masks, best_h, None)
        assert val == 0
        best_w = (y, sm)
    y, sm = best_w
    w = FunctionalityWitness(y, mask_to_set(sm), "exact-search", verified=True)
    return ExactFunctionality(best_val, mask_to_set(best_h), w)


def brute_force_functionality(g: Graph) -> int:
    """Unpruned evaluation of the max-min definition (test oracle, tiny n)."""
    n = g.n
    masks = g.masks
    best = 0
    for verts in range(1, 1 << n):
        val = min(
            _witness_at_most(masks, verts, y, verts.bit_count()).bit_count() for y in _bits(verts)
        )
        best = max(best, val)
    return best


# --------------------------------------------------------------------------
# Repetition numbers and distinguishing sets.


def _repeated(g: Graph, u: frozenset[int]) -> list[int]:
    keys = _trace_keys(g, u)
    counts: dict = {}
    for v in range(g.n):
        if v not in u:
            counts[keys[v]] = counts.get(keys[v], 0) + 1
    return [v for v in range(g.n) if v not in u and counts[keys[v]] > 1]


def _as_vertex_set(g: Graph, u: Iterable[int]) -> frozenset[int]:
    u = frozenset(int(v) for v in u)
    if any(not 0 <= v < g.n for v in u):
        raise ValueError("vertex out of range")
    return u


def repetition_number(g: Graph, u: Iterable[int]) -> int:
    """Number of vertices outside ``u`` whose trace on ``u`` is not unique."""
    return len(_repeated(g, _as_vertex_set(g, u)))


def is_distinguishing(g: Graph, s: Iterable[int]) -> bool:
    return repetition_number(g, s) == 0


def extend_to_distinguishing(g: Graph, u: Iterable[int]) -> frozenset[int]:
    """``u`` plus every vertex whose trace on ``u`` is repeated."""
    u = _as_vertex_set(g, u)
    return u | frozenset(_repeated(g, u))


def fun_upper_via_rep(g: Graph, k: int, budget: int = REP_BUDGET) -> int:
    """``k`` plus the largest repetition number over all ``k``-sets."""
    if not 0 <= k <= g.n:
        raise ValueError("need 0 <= k <= n")
    count = math.comb(g.n, k)
    if count > budget:
        raise BudgetExceeded(f"C({g.n},{k}) = {count} subsets exceeds budget {budget}")
    worst = max(repetition_number(g, u) for u in combinations(range(g.n), k))
    return k + worst


def fun_upper_via_degeneracy(g: Graph) -> int:
    return degeneracy(g).peak


def rep_bound_params(n: int, p: float) -> RepBoundParams:
    return RepBoundParams(k=math.floor(3 * math.log(n) / p), r=7 * math.log(n) / p)


@dataclass(frozen=True)
class DistinguishingResult:
    vertices: frozenset[int]
    probe_size: int
    target: float

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def within_target(self) -> bool:
        return self.size <= self.target


def distinguishing_set_from_probe(g: Graph, p: float) -> DistinguishingResult:
    """Probe with the ``floor(3 ln n / p)`` lowest-index vertices, then add the
    repeated-trace vertices.  ``target`` is ``10 ln n / p``."""
    if not 0 < p <= 0.5:
        raise ValueError("need 0 < p <= 1/2")
    if g.n < 2:
        raise ValueError("need n >= 2")
    params = rep_bound_params(g.n, p)
    k = min(params.k, g.n)
    s = extend_to_distinguishing(g, range(k))
    return DistinguishingResult(s, k, 10 * math.log(g.n) / p)


def distinguishing_witness(g: Graph, s: Iterable[int]) -> FunctionalityWitness | None:
    """Any vertex outside a distinguishing ``s`` is a function of ``s``."""
    s = _as_vertex_set(g, s)
    if not is_distinguishing(g, s):
        return None
    outside = [v for v in range(g.n) if v not in s]
    if not outside:
        return None
    return verify_witness(g, FunctionalityWitness(outside[0], s, "distinguishing"))
