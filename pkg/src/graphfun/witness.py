"""Upper-bound witnesses built from dominating sets, and lower-bound certificates.

Upper side: for a vertex ``y``, split the non-neighbours of ``y`` into ``t``
index blocks, dominate ``N(y)`` from each block, and add the non-neighbours
whose trace on the union ``D`` matches that of some dominated neighbour.  The
set ``D | N' | B`` then determines the adjacency of ``y``.

Lower side: a graph certifies ``fun >= m`` when for every ``y`` and every
``m``-set ``S`` avoiding ``y`` there are a neighbour and a non-neighbour of
``y`` outside ``S`` with no neighbours in ``S``.  Peeling low-degree vertices
first produces the subgraph on which the certificate is checked.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from .domination import t_dominating_by_union
from .errors import BudgetExceeded
from .functionality import FunctionalityWitness, PROVENANCES, to_mask, verify_witness
from .graph import Graph, induced_subgraph

CERT_BUDGET = 10**8


def regime_w(n: int, p: float) -> float:
    """``w >= 1`` placing ``p`` relative to ``sqrt(ln n / n)``."""
    if n < 2 or not 0 < p <= 1:
        raise ValueError("need n >= 2 and 0 < p <= 1")
    ln = math.log(n)
    if p * p * n <= ln:
        return ln / (n * p * p)
    return n * p * p / ln


@dataclass(frozen=True)
class WitnessBudget:
    n: int
    p: float
    C: float = 4.0
    t: int = 5

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("t must be >= 1")
        regime_w(self.n, self.p)

    @property
    def p_star(self) -> float:
        return math.sqrt(math.log(self.n) / self.n)

    @property
    def below(self) -> bool:
        return self.p * self.p * self.n <= math.log(self.n)

    @property
    def w(self) -> float:
        return regime_w(self.n, self.p)

    @property
    def d(self) -> float:
        lw = math.log(math.e * self.w)
        if self.below:
            return self.C * self.n * self.p * lw / math.log(self.n)
        return self.C * lw / self.p

    @property
    def limit(self) -> float:
        """Cap on both ``|D|`` and ``|N'|``."""
        return 2 * self.t * self.d


@dataclass(frozen=True)
class LowerBoundParams:
    m: int
    k: int


def lower_bound_params(n: int, p: float) -> LowerBoundParams:
    lw = math.log(math.e * regime_w(n, p))
    return LowerBoundParams(
        m=math.floor(n * p * lw / (20 * math.log(n))),
        k=math.ceil(lw / (4 * p)),
    )


# --------------------------------------------------------------------------
# Upper-bound witnesses.


def confusable_set(g: Graph, y: int, dominated: Iterable[int], d_set: Iterable[int]) -> frozenset[int]:
    """Non-neighbours of ``y`` (outside ``d_set``) whose trace on ``d_set``
    equals that of some vertex in ``dominated``."""
    masks = g.masks
    ny = masks[y]
    dom = to_mask(dominated)
    dm = to_mask(d_set)
    if dom & ~ny:
        raise ValueError("dominated must be a subset of N(y)")
    if dm & (dom | 1 << y):
        raise ValueError("d_set must avoid y and the dominated set")
    traces = set()
    for z in range(g.n):
        if dom >> z & 1:
            traces.add(masks[z] & dm)
    out = []
    for w in range(g.n):
        if w == y or ny >> w & 1 or dm >> w & 1:
            continue
        if masks[w] & dm in traces:
            out.append(w)
    return frozenset(out)


def _blocks(items: list[int], t: int) -> list[list[int]]:
    return [list(map(int, part)) for part in np.array_split(np.asarray(items, dtype=np.int64), t)]


def upper_witness_for_vertex(g: Graph, y: int, budget: WitnessBudget) -> FunctionalityWitness | None:
    """Domination-based witness for ``y``, or None when ``|D|`` or ``|N'|``
    exceeds ``2 t d``."""
    masks = g.masks
    full = (1 << g.n) - 1
    ny = masks[y]
    others = full & ~ny & ~(1 << y)
    if ny == 0 or others == 0:
        return verify_witness(g, FunctionalityWitness(y, frozenset(), "domination"))
    nbrs = g.neighbours(y).tolist()
    rest = [v for v in range(g.n) if others >> v & 1]
    D, missed = t_dominating_by_union(g, nbrs, budget.t, _blocks(rest, budget.t))
    if len(D) > budget.limit or len(missed) > budget.limit:
        return None
    B = confusable_set(g, y, set(nbrs) - missed, D)
    return verify_witness(g, FunctionalityWitness(y, D | missed | B, "domination"))


def find_functional_vertex(
    g: Graph, budget: WitnessBudget, max_candidates: int | None = None
) -> FunctionalityWitness:
    """Witness with small ``|S|``; its size bounds ``min_y fun(y)`` from above.

    Vertices are tried by ascending degree (ties to lower index).  The first
    pipeline witness no larger than the minimum degree is returned; failing
    that, the minimum-degree vertex with ``S = N(y)``.
    """
    if g.n < 1:
        raise ValueError("need n >= 1")
    order = sorted(range(g.n), key=lambda v: (g.degree(v), v))
    dmin = g.degree(order[0])
    for y in order[: max_candidates if max_candidates is not None else g.n]:
        w = upper_witness_for_vertex(g, y, budget)
        if w is not None and w.size <= dmin:
            return w
    y = order[0]
    return verify_witness(g, FunctionalityWitness(y, frozenset(g.neighbours(y).tolist()), "neighbourhood"))


# --------------------------------------------------------------------------
# Peeling and lower certificates.


@dataclass(frozen=True)
class PeelResult:
    h: Graph
    removed: tuple[int, ...]
    kept: tuple[int, ...]


def peel_low_degree(g: Graph, threshold: int, policy: str = "fifo") -> PeelResult:
    """Repeatedly delete vertices of current degree <= ``threshold``.

    ``policy`` only changes the removal order (``"fifo"``: queue seeded in
    index order; ``"lifo"``: stack, largest index first).  The residual vertex
    set is the same either way.
    """
    if threshold < 0:
        raise ValueError("threshold must be >= 0")
    deg = g.degree_array.astype(np.int64).copy()
    gone = np.zeros(g.n, dtype=bool)
    low = [int(v) for v in np.flatnonzero(deg <= threshold)]
    if policy == "fifo":
        queue = deque(low)
        pop = queue.popleft
    elif policy == "lifo":
        queue = deque(low)
        pop = queue.pop
    else:
        raise ValueError(f"unknown policy {policy!r}")
    queued = np.zeros(g.n, dtype=bool)
    queued[low] = True
    removed = []
    while queue:
        v = pop()
        gone[v] = True
        removed.append(v)
        for u in g.neighbours(v).tolist():
            if not gone[u]:
                deg[u] -= 1
                if deg[u] <= threshold and not queued[u]:
                    queued[u] = True
                    queue.append(u)
    kept = tuple(int(v) for v in np.flatnonzero(~gone))
    h, _ = induced_subgraph(g, kept)
    return PeelResult(h, tuple(removed), kept)


@dataclass(frozen=True)
class CertificateVerdict:
    verdict: bool
    exhaustive: bool
    m: int
    checked: int
    counterexample: tuple[int, tuple[int, ...]] | None = None
    reason: str = ""
    uniform_trials: int = 0
    uniform_failures: int = 0
    degree_trials: int = 0
    degree_failures: int = 0

    @property
    def proves_lower_bound(self) -> bool:
        return self.verdict and self.exhaustive


def _blocked(masks, full: int, y: int, combo) -> bool:
    """True when ``S = combo`` leaves no free neighbour or no free
    non-neighbour of ``y``."""
    sm = 0
    hit = 0
    for s in combo:
        sm |= 1 << s
        hit |= masks[s]
    free = full & ~hit & ~sm & ~(1 << y)
    ny = masks[y]
    return not (free & ny) or not (free & ~ny)


def lower_certificate_check(
    g: Graph,
    m: int,
    mode: str = "exhaustive",
    trials: int = 1000,
    seed: int = 0,
    budget: int = CERT_BUDGET,
) -> CertificateVerdict:
    """Check the no-small-distinguisher certificate for ``fun(g) >= m``.

    ``exhaustive`` visits ``(y, S)`` in lexicographic order and reports the
    first failure.  ``sampled`` runs ``trials`` random draws, half with ``y``
    uniform and half with ``y`` chosen proportionally to degree; a pass there
    only means no counterexample was found.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    n = g.n
    if n < m + 3:
        return CertificateVerdict(False, mode == "exhaustive", m, 0, reason=f"n={n} < m+3")
    masks = g.masks
    full = (1 << n) - 1
    if mode == "exhaustive":
        work = math.comb(n - 1, m) * n
        if work > budget:
            raise BudgetExceeded(f"exhaustive certificate needs {work} checks > budget {budget}")
        checked = 0
        for y in range(n):
            others = [v for v in range(n) if v != y]
            for combo in combinations(others, m):
                checked += 1
                if _blocked(masks, full, y, combo):
                    return CertificateVerdict(
                        False, True, m, checked, (y, combo), reason=f"y={y} is determined by S={list(combo)}"
                    )
        return CertificateVerdict(True, True, m, checked)
    if mode != "sampled":
        raise ValueError(f"unknown mode {mode!r}")
    rng = np.random.default_rng(seed)
    deg = g.degree_array.astype(np.float64)
    weights = deg / deg.sum() if deg.sum() > 0 else None
    counts = {"uniform": [0, 0], "degree": [0, 0]}
    first = None
    for trial in range(trials):
        stratum = "uniform" if trial % 2 == 0 else "degree"
        if stratum == "uniform" or weights is None:
            y = int(rng.integers(n))
        else:
            y = int(rng.choice(n, p=weights))
        pool = np.delete(np.arange(n), y)
        combo = tuple(sorted(int(v) for v in rng.choice(pool, size=m, replace=False)))
        counts[stratum][0] += 1
        if _blocked(masks, full, y, combo):
            counts[stratum][1] += 1
            if first is None:
                first = (y, combo)
    ok = first is None
    return CertificateVerdict(
        ok,
        False,
        m,
        trials,
        first,
        reason="" if ok else f"y={first[0]} is determined by S={list(first[1])}",
        uniform_trials=counts["uniform"][0],
        uniform_failures=counts["uniform"][1],
        degree_trials=counts["degree"][0],
        degree_failures=counts["degree"][1],
    )


@dataclass(frozen=True)
class LowerBoundResult:
    peel: PeelResult
    m: int
    verdict: CertificateVerdict

    @property
    def lower_bound(self) -> int:
        """``m`` when the exhaustive certificate holds, else 0."""
        return self.m if self.verdict.proves_lower_bound else 0


def lower_bound_pipeline(
    g: Graph,
    p: float,
    mode: str = "exhaustive",
    trials: int = 1000,
    seed: int = 0,
    budget: int = CERT_BUDGET,
) -> LowerBoundResult:
    """Peel at ``floor(n p / 5)`` and certify the regime's target size.

    The target is ``floor(n p ln(ew) / (20 ln n))`` when ``p`` is at most
    ``sqrt(ln n / n)`` and ``ceil(ln(ew) / (4 p))`` above it.
    """
    n = g.n
    peel = peel_low_degree(g, math.floor(n * p / 5))
    if n < 2:
        return LowerBoundResult(peel, 0, CertificateVerdict(False, mode == "exhaustive", 0, 0, reason="n < 2"))
    params = lower_bound_params(n, p)
    m = params.m if p * p * n <= math.log(n) else params.k
    verdict = lower_certificate_check(peel.h, m, mode, trials, seed, budget)
    return LowerBoundResult(peel, m, verdict)


# --------------------------------------------------------------------------
# Text formats.


class WitnessFormatError(ValueError):
    pass


def _fields(text: str) -> dict[str, str]:
    out = {}
    for lineno, ln in enumerate(text.splitlines(), 1):
        if not ln.strip():
            continue
        key, sep, val = ln.partition(":")
        if not sep:
            raise WitnessFormatError(f"line {lineno}: expected 'key: value', got {ln!r}")
        out[key.strip()] = val.strip()
    return out


def write_witness(w: FunctionalityWitness) -> str:
    return f"y: {w.y}\nS: {' '.join(map(str, sorted(w.s)))}\nprovenance: {w.provenance}\n"


def read_witness(text: str) -> FunctionalityWitness:
    f = _fields(text)
    try:
        y = int(f["y"])
        s = frozenset(int(v) for v in f["S"].split())
    except KeyError as e:
        raise WitnessFormatError(f"missing field {e.args[0]!r}") from None
    except ValueError:
        raise WitnessFormatError("non-integer vertex in witness") from None
    prov = f.get("provenance", "exact-search")
    if prov not in PROVENANCES:
        raise WitnessFormatError(f"unknown provenance {prov!r}")
    return FunctionalityWitness(y, s, prov)


@dataclass(frozen=True)
class LowerCertificateSpec:
    m: int
    mode: str = "exhaustive"
    trials: int = 1000
    seed: int = 0


def write_lower_spec(spec: LowerCertificateSpec) -> str:
    return f"m: {spec.m}\nmode: {spec.mode}\ntrials: {spec.trials}\nseed: {spec.seed}\n"


def read_lower_spec(text: str) -> LowerCertificateSpec:
    f = _fields(text)
    try:
        spec = LowerCertificateSpec(
            m=int(f["m"]),
            mode=f.get("mode", "exhaustive"),
            trials=int(f.get("trials", 1000)),
            seed=int(f.get("seed", 0)),
        )
    except KeyError:
        raise WitnessFormatError("missing field 'm'") from None
    except ValueError:
        raise WitnessFormatError("non-integer field in certificate spec") from None
    if spec.m < 0 or spec.mode not in ("exhaustive", "sampled"):
        raise WitnessFormatError("invalid certificate spec")
    return spec
