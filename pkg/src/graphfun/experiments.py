"""Seeded Monte Carlo sweeps with CSV output.

Every row derives its own seed from ``(master seed, row index)`` through
``numpy.random.SeedSequence``, so rows are independent of execution order and
of how they are spread over worker processes.  Output rows are always sorted by
row index.  The trailing ``wall_time_s`` column is the only non-deterministic
field.
"""

from __future__ import annotations

import csv
import io
import math
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

import numpy as np

from .domination import (
    DominationParams,
    greedy_paper_domination,
    greedy_simple_domination,
    is_dominating,
    min_dominating_exact,
)
from .errors import BudgetExceeded
from .functionality import distinguishing_set_from_probe, graph_functionality_exact
from .graph import gen_bipartite, gen_gnp
from .parameters import degeneracy
from .witness import WitnessBudget, find_functional_vertex, lower_bound_pipeline, regime_w

SCHEMA_VERSION = 1

CURVE_COLUMNS = (
    "row", "p_index", "trial", "seed", "n", "p", "w", "side", "edges",
    "exact_fun", "dgn", "dist_size", "dist_probe", "dist_target",
    "witness_size", "witness_provenance",
    "lower_m", "lower_mode", "lower_verdict", "lower_bound",
    "wall_time_s",
)

DOMINATION_COLUMNS = (
    "row", "seed", "a", "b", "p", "h", "alpha", "delta", "c", "C_final",
    "success", "exhausted", "rounds", "processed", "D_size", "Aprime_size",
    "D_within_bound", "dominating_ok", "simple_greedy_size", "exact_min_size",
    "wall_time_s",
)


def trial_seed(master: int, row: int) -> int:
    """64-bit seed for ``row`` under ``master``."""
    ss = np.random.SeedSequence([int(master), int(row)])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


@dataclass(frozen=True)
class RegimeParams:
    n: int
    p: float
    w: float
    p_star: float
    side: str
    epsilon: float = 0.1

    @property
    def in_window(self) -> bool:
        lo = self.n ** (-0.5 - self.epsilon)
        hi = self.n ** (-0.5 + self.epsilon)
        return lo <= self.p <= hi


def resolve_regime(n: int, kind: str, value: float, epsilon: float = 0.1) -> RegimeParams:
    """Fill in ``p``, ``w``, ``p*`` and the side from one of
    ``kind="p"``, ``"w_below"`` (``p = sqrt(ln n / (w n))``) or ``"w_above"``
    (``p = sqrt(w ln n / n)``)."""
    if n < 2:
        raise ValueError("need n >= 2")
    ln = math.log(n)
    p_star = math.sqrt(ln / n)
    if kind == "p":
        p = float(value)
    elif kind in ("w_below", "w_above"):
        if value < 1:
            raise ValueError("w must be >= 1")
        p = math.sqrt(ln / (value * n)) if kind == "w_below" else math.sqrt(value * ln / n)
    else:
        raise ValueError(f"unknown regime kind {kind!r}")
    if not 0 < p <= 1:
        raise ValueError(f"resolved p={p} is outside (0, 1]")
    side = "below" if p * p * n <= ln else "above"
    return RegimeParams(n, p, regime_w(n, p), p_star, side, epsilon)


def geometric_grid(lo: float, hi: float, count: int) -> list[float]:
    return [float(x) for x in np.geomspace(lo, hi, count)]


def domination_regime_warnings(a: int, b: int, p: float, h: float, alpha: float, beta: float = 0.1) -> list[str]:
    n = a + b
    out = []
    if a * p * h > alpha * math.log(n):
        out.append(f"a*p*h = {a * p * h:.4g} exceeds alpha*ln(a+b) = {alpha * math.log(n):.4g}")
    if b * p <= n**beta:
        out.append(f"b*p = {b * p:.4g} is at most (a+b)^beta = {n**beta:.4g}")
    return out


def dominating_existence_upper_bound(a: int, b: int, p: float) -> float:
    """Upper bound ``1 - exp(-3 a b p)`` on the chance, given no isolated
    A-vertex, that some ``O(1/p)`` dominating set exists."""
    return -math.expm1(-3 * a * b * p)


def _fmt(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def to_csv(columns: Sequence[str], rows: Sequence[dict], kind: str) -> str:
    buf = io.StringIO()
    buf.write(f"#schema={SCHEMA_VERSION} kind={kind}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_fmt(r.get(c)) for c in columns])
    return buf.getvalue()


def read_csv(text: str) -> list[dict[str, str]]:
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    return list(csv.DictReader(lines))


def strip_timing(text: str) -> str:
    """Drop the ``wall_time_s`` column for determinism comparisons."""
    out = []
    for ln in text.splitlines():
        out.append(ln if ln.startswith("#") else ln.rsplit(",", 1)[0])
    return "\n".join(out) + "\n"


def _run_rows(fn: Callable[[int], dict], count: int, workers: int) -> list[dict]:
    if workers <= 1 or count <= 1:
        return [fn(i) for i in range(count)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, range(count)))


# --------------------------------------------------------------------------
# Functionality curve.


@dataclass(frozen=True)
class CurveConfig:
    n: int
    grid: tuple[float, ...]
    trials: int
    seed: int
    exact_cutoff: int = 10
    lower_trials: int = 200
    lower_budget: int = 10**6
    witness_C: float = 4.0
    witness_t: int = 5
    witness_candidates: int = 8

    def __call__(self, row: int) -> dict:
        return curve_row(self, row)


def curve_row(cfg: CurveConfig, row: int) -> dict:
    start = time.perf_counter()
    p_index, trial = divmod(row, cfg.trials)
    p = cfg.grid[p_index]
    seed = trial_seed(cfg.seed, row)
    n = cfg.n
    g = gen_gnp(n, p, seed)
    rec: dict[str, Any] = {
        "row": row, "p_index": p_index, "trial": trial, "seed": seed,
        "n": n, "p": p, "edges": g.m,
    }
    if n >= 2:
        reg = resolve_regime(n, "p", p)
        rec["w"], rec["side"] = reg.w, reg.side
    if n <= cfg.exact_cutoff:
        rec["exact_fun"] = graph_functionality_exact(g, limit=max(cfg.exact_cutoff, 1)).value
    rec["dgn"] = degeneracy(g).peak
    if n >= 2:
        # Distinguishing sets are the same in g and its complement.
        q = p if p <= 0.5 else 1 - p
        if q > 0:
            dist = distinguishing_set_from_probe(g, q)
            rec["dist_size"], rec["dist_probe"], rec["dist_target"] = dist.size, dist.probe_size, dist.target
        wit = find_functional_vertex(
            g, WitnessBudget(n, p, cfg.witness_C, cfg.witness_t), cfg.witness_candidates
        )
        rec["witness_size"], rec["witness_provenance"] = wit.size, wit.provenance
        try:
            low = lower_bound_pipeline(g, p, "exhaustive", budget=cfg.lower_budget)
        except BudgetExceeded:
            low = lower_bound_pipeline(g, p, "sampled", trials=cfg.lower_trials, seed=seed)
        rec["lower_m"] = low.m
        rec["lower_mode"] = "exhaustive" if low.verdict.exhaustive else "sampled"
        rec["lower_verdict"] = low.verdict.verdict
        rec["lower_bound"] = low.lower_bound
    rec["wall_time_s"] = round(time.perf_counter() - start, 6)
    return rec


@dataclass
class CurveResult:
    config: CurveConfig
    rows: list[dict] = field(default_factory=list)

    def csv(self) -> str:
        return to_csv(CURVE_COLUMNS, self.rows, "curve")


def run_fun_curve(
    n: int,
    grid: Sequence[float],
    trials: int,
    seed: int,
    exact_cutoff: int = 10,
    workers: int = 1,
    **options: Any,
) -> CurveResult:
    """One row per ``(p, trial)``: exact value when ``n <= exact_cutoff``,
    degeneracy, probe-based distinguishing set size, witness size and the
    peeled lower-certificate verdict.

    ``witness_size`` bounds the smallest per-vertex value of the whole graph,
    not ``fun`` itself.  ``lower_bound`` is nonzero only for exhaustive
    certificates.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if any(not 0 < p <= 1 for p in grid):
        raise ValueError("grid values must lie in (0, 1]")
    cfg = CurveConfig(n, tuple(float(p) for p in grid), trials, seed, exact_cutoff, **options)
    return CurveResult(cfg, _run_rows(cfg, len(cfg.grid) * trials, workers))


def curve_medians(result: CurveResult) -> list[float]:
    """Per-grid-point median of ``min(dgn, dist_size)``."""
    out = []
    for i in range(len(result.config.grid)):
        vals = [min(r["dgn"], r.get("dist_size", r["dgn"])) for r in result.rows if r["p_index"] == i]
        out.append(float(np.median(vals)))
    return out


# --------------------------------------------------------------------------
# Domination experiment.


@dataclass(frozen=True)
class DominationConfig:
    a: int
    b: int
    p: float
    h: float
    alpha: float
    delta: float
    trials: int
    seed: int
    exact: bool

    def __call__(self, row: int) -> dict:
        return domination_row(self, row)


def domination_row(cfg: DominationConfig, row: int) -> dict:
    start = time.perf_counter()
    seed = trial_seed(cfg.seed, row)
    bg = gen_bipartite(cfg.a, cfg.b, cfg.p, seed)
    params = DominationParams(cfg.p, cfg.h, cfg.alpha, cfg.delta)
    tr = greedy_paper_domination(bg, params)
    covered = sorted(set(range(cfg.a)) - set(tr.A_prime))
    rec: dict[str, Any] = {
        "row": row, "seed": seed, "a": cfg.a, "b": cfg.b, "p": cfg.p, "h": cfg.h,
        "alpha": cfg.alpha, "delta": cfg.delta, "c": params.c, "C_final": params.C_final,
        "success": tr.success, "exhausted": tr.exhausted, "rounds": len(tr.rounds),
        "processed": tr.processed, "D_size": len(tr.D), "Aprime_size": len(tr.A_prime),
        "D_within_bound": len(tr.D) <= params.C_final / cfg.p,
        "dominating_ok": is_dominating(bg, tr.D, covered, 1),
    }
    if cfg.exact:
        targets = [i for i in range(cfg.a) if bg.a_masks[i]]
        rec["simple_greedy_size"] = len(greedy_simple_domination(bg, targets))
        rec["exact_min_size"] = len(min_dominating_exact(bg, targets))
    rec["wall_time_s"] = round(time.perf_counter() - start, 6)
    return rec


@dataclass
class DominationResult:
    config: DominationConfig
    rows: list[dict] = field(default_factory=list)

    def csv(self) -> str:
        return to_csv(DOMINATION_COLUMNS, self.rows, "dominate")


def run_domination_experiment(
    a: int,
    b: int,
    p: float,
    h: float = 1.0,
    alpha: float = 1.0,
    delta: float = 0.3,
    trials: int = 100,
    seed: int = 0,
    exact: bool | None = None,
    workers: int = 1,
) -> DominationResult:
    """Round-based greedy per trial; exact and simple-greedy columns when the
    instance is small enough (``a <= 30``, ``b <= 60``) or forced."""
    for msg in domination_regime_warnings(a, b, p, h, alpha):
        warnings.warn(msg, stacklevel=2)
    if exact is None:
        exact = a <= 30 and b <= 60
    cfg = DominationConfig(a, b, p, h, alpha, delta, trials, seed, exact)
    return DominationResult(cfg, _run_rows(cfg, trials, workers))
