"""Command line entry point: ``graphfun <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import experiments as ex
from .errors import BudgetExceeded, Infeasible
from .functionality import (
    EXACT_LIMIT,
    FunctionalityWitness,
    REP_BUDGET,
    confusing_pair,
    distinguishing_set_from_probe,
    fun_upper_via_degeneracy,
    fun_upper_via_rep,
    graph_functionality_exact,
    vertex_functionality,
)
from .graph import (
    GraphFormatError,
    gen_bipartite,
    gen_gnp,
    named_family,
    read_edge_list,
    write_bipartite,
    write_edge_list,
)
from .witness import (
    WitnessBudget,
    WitnessFormatError,
    find_functional_vertex,
    lower_certificate_check,
    peel_low_degree,
    read_lower_spec,
    read_witness,
    write_witness,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _load_graph(path: str):
    try:
        return read_edge_list(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _floats(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad number list {text!r}") from None


def cmd_gen(args) -> int:
    if args.kind == "gnp":
        text = write_edge_list(gen_gnp(args.n, args.p, args.seed))
    elif args.kind == "bipartite":
        text = write_bipartite(gen_bipartite(args.a, args.b, args.p, args.seed))
    else:
        text = write_edge_list(named_family(args.kind, args.size))
    _emit(text, args.out)
    return EXIT_OK


def cmd_fun(args) -> int:
    g = _load_graph(args.graph)
    lines = [f"n: {g.n}", f"m: {g.m}", f"dgn_upper: {fun_upper_via_degeneracy(g)}"]
    for k in args.rep_k:
        lines.append(f"rep_upper_k{k}: {fun_upper_via_rep(g, k, args.budget)}")
    if args.p is not None and g.n >= 2:
        q = args.p if args.p <= 0.5 else 1 - args.p
        lines.append(f"distinguishing_upper: {distinguishing_set_from_probe(g, q).size}")
    if g.n <= args.limit:
        res = graph_functionality_exact(g, args.limit)
        lines.append(f"exact: {res.value}")
        lines.append("extremal: " + " ".join(map(str, sorted(res.subgraph))))
    elif args.exact:
        raise BudgetExceeded(f"n={g.n} exceeds exact limit {args.limit}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_witness(args) -> int:
    g = _load_graph(args.graph)
    if args.vertex is not None:
        if not 0 <= args.vertex < g.n:
            raise UsageError(f"vertex {args.vertex} out of range")
        if g.n > args.limit:
            raise BudgetExceeded(f"n={g.n} exceeds exact limit {args.limit}")
        _, s = vertex_functionality(g, args.vertex)
        w = FunctionalityWitness(args.vertex, s, "exact-search")
    else:
        if args.p is None:
            p = 2 * g.m / (g.n * (g.n - 1)) if g.n >= 2 else 0.0
        else:
            p = args.p
        if g.n < 2 or p <= 0:
            w = find_functional_vertex(g, WitnessBudget(2, 0.5), 0)
        else:
            w = find_functional_vertex(g, WitnessBudget(g.n, p, args.C, args.t), args.candidates)
    _emit(write_witness(w), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    if args.witness:
        try:
            w = read_witness(Path(args.witness).read_text(encoding="utf-8"))
        except OSError as e:
            raise UsageError(f"cannot read {args.witness}: {e.strerror}") from None
        if not 0 <= w.y < g.n or any(not 0 <= v < g.n for v in w.s) or w.y in w.s:
            raise UsageError("witness vertices out of range or y in S")
        pair = confusing_pair(g, w.y, w.s)
        if pair is None:
            print(f"OK: vertex {w.y} is a function of {len(w.s)} vertices")
            return EXIT_OK
        print(
            f"FAIL: vertices {pair[0]} (adjacent to {w.y}) and {pair[1]} (not adjacent) "
            f"have the same neighbourhood in S"
        )
        return EXIT_FAIL
    try:
        spec = read_lower_spec(Path(args.lower).read_text(encoding="utf-8"))
    except OSError as e:
        raise UsageError(f"cannot read {args.lower}: {e.strerror}") from None
    v = lower_certificate_check(g, spec.m, spec.mode, spec.trials, spec.seed, args.budget)
    if v.verdict:
        scope = "proves" if v.exhaustive else "no counterexample in sampled trials for"
        print(f"OK: certificate {scope} fun >= {spec.m} ({v.checked} checks)")
        return EXIT_OK
    print(f"FAIL: {v.reason}")
    return EXIT_FAIL


def cmd_curve(args) -> int:
    if args.grid:
        grid = _floats(args.grid)
    else:
        lo, hi, count = _floats(args.geom)
        grid = ex.geometric_grid(lo, hi, int(count))
    res = ex.run_fun_curve(
        args.n, grid, args.trials, args.seed, args.exact_cutoff, args.threads,
        lower_trials=args.lower_trials, lower_budget=args.budget,
    )
    _emit(res.csv(), args.out)
    return EXIT_OK


def cmd_dominate(args) -> int:
    res = ex.run_domination_experiment(
        args.a, args.b, args.p, args.h, args.alpha, args.delta, args.trials, args.seed,
        exact=True if args.exact else None, workers=args.threads,
    )
    _emit(res.csv(), args.out)
    return EXIT_OK


def cmd_peel(args) -> int:
    g = _load_graph(args.graph)
    res = peel_low_degree(g, args.threshold)
    _emit(write_edge_list(res.h), args.out)
    print("kept: " + " ".join(map(str, res.kept)), file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=None)
    common.add_argument("--out", default=None, help="output path (default stdout)")
    common.add_argument("--threads", type=int, default=1, help="worker processes")
    common.add_argument("--budget", type=int, default=None, help="work budget for exhaustive steps")

    parser = argparse.ArgumentParser(prog="graphfun", description="Graph functionality laboratory")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a graph file")
    p.add_argument("kind", choices=["gnp", "bipartite", "path", "cycle", "complete", "star", "empty", "hypercube"])
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--a", type=int, default=10)
    p.add_argument("--b", type=int, default=10)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--size", type=int, default=5)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("fun", parents=[common], help="exact value or bounds for a graph file")
    p.add_argument("graph")
    p.add_argument("--exact", action="store_true", help="fail with exit 3 if exact is out of reach")
    p.add_argument("--limit", type=int, default=EXACT_LIMIT)
    p.add_argument("--rep-k", type=int, action="append", default=[])
    p.add_argument("--p", type=float, default=None, help="edge probability for the probe bound")
    p.set_defaults(func=cmd_fun)

    p = sub.add_parser("witness", parents=[common], help="write a functionality witness")
    p.add_argument("graph")
    p.add_argument("--vertex", type=int, default=None, help="exact minimal witness for this vertex")
    p.add_argument("--limit", type=int, default=EXACT_LIMIT)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--C", type=float, default=4.0)
    p.add_argument("--t", type=int, default=5)
    p.add_argument("--candidates", type=int, default=None)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", parents=[common], help="check a witness or lower certificate")
    p.add_argument("graph")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--witness")
    grp.add_argument("--lower", help="certificate spec file with 'm: <int>'")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("curve", parents=[common], help="fun(G(n,p)) sweep to CSV")
    p.add_argument("--n", type=int, required=True)
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--grid", help="comma-separated p values")
    grp.add_argument("--geom", help="lo,hi,count geometric grid")
    p.add_argument("--exact-cutoff", type=int, default=10)
    p.add_argument("--lower-trials", type=int, default=200)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("dominate", parents=[common], help="bipartite domination experiment to CSV")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--h", type=float, default=1.0)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--delta", type=float, default=0.3)
    p.add_argument("--exact", action="store_true", help="force the exact-minimum column")
    p.set_defaults(func=cmd_dominate)

    p = sub.add_parser("peel", parents=[common], help="iteratively remove low-degree vertices")
    p.add_argument("graph")
    p.add_argument("--threshold", type=int, required=True)
    p.set_defaults(func=cmd_peel)
    return parser


_DEFAULT_BUDGETS = {"fun": REP_BUDGET, "verify": 10**8, "curve": 10**6}
_DEFAULT_TRIALS = {"curve": 10, "dominate": 100}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget is None:
        args.budget = _DEFAULT_BUDGETS.get(args.command, 10**7)
    if args.trials is None:
        args.trials = _DEFAULT_TRIALS.get(args.command, 1)
    try:
        return args.func(args)
    except (GraphFormatError, WitnessFormatError, UsageError, Infeasible) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
