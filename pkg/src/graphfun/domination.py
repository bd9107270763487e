"""Dominating sets of one side of a bipartite graph by the other side.

``greedy_paper_domination`` is the round-based greedy with thresholds
``k_i = ceil(a p h / (i c^2 ln 2h))`` and ``l_i = ceil(a e^{-i c})``.  B-vertices
are exposed once each, in index order; a vertex joins the current round's
set when it has at least ``k_i`` not-yet-dominated neighbours, a round ends
once fewer than ``l_i`` A-vertices remain undominated, and the run stops when
at most ``1/(p h)`` remain (success) or B is used up (exhausted).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import BudgetExceeded, Infeasible, SizeLimitExceeded
from .graph import BipartiteGraph, Graph


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << int(v)
    return m


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def is_dominating(bg: BipartiteGraph, d: Iterable[int], targets: Iterable[int], t: int = 1) -> bool:
    """True iff every target has at least ``t`` neighbours in ``d``."""
    if t < 1:
        raise ValueError("t must be >= 1")
    dm = _mask(d)
    rows = bg.a_masks
    return all((rows[i] & dm).bit_count() >= t for i in targets)


def _greedy_cover(candidates: Mapping[int, int], target: int) -> list[int]:
    """Max-coverage greedy, ties to the lowest candidate index.

    ``candidates`` maps candidate index to its coverage mask; ``target`` must
    be coverable.
    """
    chosen = []
    order = sorted(candidates)
    while target:
        best_j, best_gain = -1, 0
        for j in order:
            gain = (candidates[j] & target).bit_count()
            if gain > best_gain:
                best_j, best_gain = j, gain
        if best_gain == 0:
            raise Infeasible("uncoverable target")
        chosen.append(best_j)
        target &= ~candidates[best_j]
    return chosen


def _check_targets(bg: BipartiteGraph, targets: Iterable[int]) -> list[int]:
    targets = sorted(set(int(i) for i in targets))
    for i in targets:
        if not 0 <= i < bg.a:
            raise ValueError(f"target {i} out of range")
        if bg.a_masks[i] == 0:
            raise Infeasible(f"target {i} has no neighbour in B")
    return targets


def greedy_simple_domination(bg: BipartiteGraph, targets: Iterable[int] | None = None) -> list[int]:
    """Repeatedly take the B-vertex covering most uncovered targets."""
    targets = _check_targets(bg, range(bg.a) if targets is None else targets)
    cover = dict(enumerate(bg.b_masks))
    return sorted(_greedy_cover(cover, _mask(targets)))


def min_dominating_exact(
    bg: BipartiteGraph,
    targets: Iterable[int] | None = None,
    max_a: int = 30,
    max_b: int = 60,
    work_limit: int = 5_000_000,
) -> list[int]:
    """Minimum subset of B dominating ``targets``, by branch and bound.

    Branches on the uncovered target with fewest dominators, trying its
    dominators by decreasing fresh coverage (ties to lower index).  The bound
    is ``ceil(uncovered / best single coverage)``; the incumbent starts at the
    greedy solution.  Deterministic for a given instance.
    """
    if bg.a > max_a or bg.b > max_b:
        raise SizeLimitExceeded(f"exact domination limited to a<={max_a}, b<={max_b}")
    targets = _check_targets(bg, range(bg.a) if targets is None else targets)
    cols = bg.b_masks
    rows = bg.a_masks
    best = greedy_simple_domination(bg, targets)
    state = {"best": list(best), "nodes": 0}

    def go(uncovered: int, chosen: list[int]) -> None:
        state["nodes"] += 1
        if state["nodes"] > work_limit:
            raise BudgetExceeded(f"branch and bound exceeded {work_limit} nodes")
        if not uncovered:
            if len(chosen) < len(state["best"]):
                state["best"] = list(chosen)
            return
        room = len(state["best"]) - len(chosen)
        if room <= 1:
            return
        top = max((c & uncovered).bit_count() for c in cols)
        if len(chosen) + -(-uncovered.bit_count() // top) >= len(state["best"]):
            return
        pivot = min(_bits(uncovered), key=lambda i: (rows[i].bit_count(), i))
        options = sorted(_bits(rows[pivot]), key=lambda j: (-(cols[j] & uncovered).bit_count(), j))
        for j in options:
            chosen.append(j)
            go(uncovered & ~cols[j], chosen)
            chosen.pop()

    go(_mask(targets), [])
    return sorted(state["best"])


# --------------------------------------------------------------------------
# Round-based greedy.


@dataclass(frozen=True)
class DominationParams:
    p: float
    h: float = 1.0
    alpha: float = 1.0
    delta: float = 0.3

    def __post_init__(self):
        if not 0 < self.p <= 1:
            raise ValueError("p must lie in (0, 1]")
        if self.h < 1:
            raise ValueError("h must be >= 1")
        if self.alpha <= 0 or self.delta <= 0:
            raise ValueError("alpha and delta must be positive")

    @property
    def c(self) -> float:
        return max(20 * self.alpha / self.delta, 1.0)

    @property
    def C_final(self) -> float:
        c = self.c
        try:
            return max(c * c * math.exp(c), math.exp(2 * c + 2))
        except OverflowError:
            return math.inf

    @property
    def stop_count(self) -> float:
        return 1 / (self.p * self.h)


def round_thresholds(a: int, params: DominationParams, i: int) -> tuple[int, int]:
    """``(k_i, l_i)`` for round ``i >= 1``.

    Both are ceilings of positive reals, so ``l_i`` is clamped to 1 where
    ``exp`` underflows to zero.
    """
    p, h, c = params.p, params.h, params.c
    k = math.ceil(a * p * h / (i * c * c * math.log(2 * h)))
    l = max(1, math.ceil(a * math.exp(-i * c)))
    return k, l


@dataclass(frozen=True)
class DominationRound:
    i: int
    k: int
    l: int
    tau: int
    selected: tuple[int, ...]


@dataclass(frozen=True)
class DominationTrace:
    a: int
    params: DominationParams
    rounds: tuple[DominationRound, ...]
    D: tuple[int, ...]
    A_prime: tuple[int, ...]
    exhausted: bool

    @property
    def success(self) -> bool:
        return not self.exhausted

    @property
    def processed(self) -> int:
        return sum(r.tau for r in self.rounds)

    def to_text(self) -> str:
        lines = [f"{r.i} {r.k} {r.l} {r.tau} {len(r.selected)}" for r in self.rounds]
        lines.append("D: " + " ".join(map(str, self.D)))
        lines.append("Aprime: " + " ".join(map(str, self.A_prime)))
        return "\n".join(lines) + "\n"


def parse_trace_text(text: str) -> dict:
    """Inverse of :meth:`DominationTrace.to_text` (round tuples, D, A')."""
    rounds, d, aprime = [], None, None
    for ln in text.splitlines():
        if ln.startswith("D:"):
            d = [int(x) for x in ln[2:].split()]
        elif ln.startswith("Aprime:"):
            aprime = [int(x) for x in ln[7:].split()]
        elif ln.strip():
            rounds.append(tuple(int(x) for x in ln.split()))
    if d is None or aprime is None:
        raise ValueError("trace text lacks D: or Aprime: line")
    return {"rounds": rounds, "D": d, "A_prime": aprime}


def greedy_paper_domination(bg: BipartiteGraph, params: DominationParams) -> DominationTrace:
    if bg.a < 1:
        raise ValueError("need a >= 1")
    a = bg.a
    cols = bg.b_masks
    undominated = (1 << a) - 1
    count = a
    stop = params.stop_count
    rounds: list[DominationRound] = []
    j = 0
    done = count <= stop
    i = 1
    while not done and j < bg.b:
        k, l = round_thresholds(a, params, i)
        picked: list[int] = []
        tau = 0
        while j < bg.b:
            v = j
            j += 1
            tau += 1
            fresh = cols[v] & undominated
            gain = fresh.bit_count()
            if gain >= k:
                picked.append(v)
                undominated ^= fresh
                count -= gain
            if count <= stop:
                done = True
                break
            if count < l:
                break
        rounds.append(DominationRound(i, k, l, tau, tuple(picked)))
        i += 1
    D = tuple(v for r in rounds for v in r.selected)
    return DominationTrace(a, params, tuple(rounds), tuple(sorted(D)), tuple(_bits(undominated)), not done)


# --------------------------------------------------------------------------
# t-domination as a union of per-pool dominating sets.


def t_dominating_by_union(
    g: Graph, target: Iterable[int], t: int, pools: Sequence[Iterable[int]]
) -> tuple[frozenset[int], frozenset[int]]:
    """Dominate ``target`` separately from each of ``t`` disjoint pools.

    Returns ``(D, N')``: ``D`` is the union of the per-pool greedy dominating
    sets and ``N'`` the targets that some pool could not reach.  Every target
    outside ``N'`` has at least ``t`` neighbours in ``D``.
    """
    if len(pools) != t:
        raise ValueError(f"expected {t} pools, got {len(pools)}")
    target = frozenset(int(v) for v in target)
    pools = [frozenset(int(v) for v in pool) for pool in pools]
    seen: set[int] = set()
    for pool in pools:
        if pool & target or pool & seen:
            raise ValueError("pools must be disjoint from each other and from the target")
        seen |= pool
    masks = g.masks
    tmask = _mask(target)
    D: set[int] = set()
    missed = 0
    for pool in pools:
        cover = {v: masks[v] & tmask for v in pool}
        reach = 0
        for c in cover.values():
            reach |= c
        missed |= tmask & ~reach
        D.update(_greedy_cover(cover, reach))
    return frozenset(D), frozenset(_bits(missed))
