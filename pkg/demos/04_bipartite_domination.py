"""
Dominating one side of a random bipartite graph
===============================================

The round-based greedy exposes B-vertices once each and keeps those that
reach enough still-undominated A-vertices.  On small instances it can be
compared with the exact minimum and the plain max-coverage greedy.
"""

from graphfun import (
    DominationParams,
    gen_bipartite,
    greedy_paper_domination,
    greedy_simple_domination,
    is_dominating,
    min_dominating_exact,
)

bg = gen_bipartite(400, 5000, 0.02, seed=0)
params = DominationParams(p=0.02, h=1, alpha=1, delta=0.3)
trace = greedy_paper_domination(bg, params)
print(f"success={trace.success}  |D|={len(trace.D)}  undominated={len(trace.A_prime)}  processed={trace.processed}")
assert is_dominating(bg, trace.D, set(range(400)) - set(trace.A_prime))

# Smaller constants make the per-round thresholds bite.
steep = DominationParams(p=0.02, h=1, alpha=0.01, delta=1)
print(greedy_paper_domination(bg, steep).to_text().splitlines()[:3])

small = gen_bipartite(12, 30, 0.2, seed=3)
targets = [i for i in range(12) if small.a_masks[i]]
print("simple greedy:", greedy_simple_domination(small, targets))
print("exact minimum:", min_dominating_exact(small, targets))
