"""
Exact functionality on small graphs
===================================

A vertex is a function of a set S when its adjacency to every other vertex
can be read off from that vertex's adjacency to S.  For graphs up to a dozen
vertices the max-min value over induced subgraphs is computed exactly.
"""

from graphfun import (
    complement,
    confusing_pair,
    degeneracy,
    gen_gnp,
    graph_functionality_exact,
    is_function_of,
    named_family,
    vertex_functionality,
)

p4 = named_family("path", 4)

# With nothing to look at, vertices 0 and 3 look alike but only 0 touches 1.
print("confusing pair for y=1, S={}:", confusing_pair(p4, 1, set()))
print("is 1 a function of {3}?", is_function_of(p4, 1, {3}))
print("per-vertex minimum for 1:", vertex_functionality(p4, 1))

for name, g in [("P4", p4), ("C4", named_family("cycle", 4)), ("C5", named_family("cycle", 5)),
                ("K6", named_family("complete", 6)), ("Q3", named_family("hypercube", 3))]:
    res = graph_functionality_exact(g)
    print(f"{name}: fun={res.value}  degeneracy={degeneracy(g).peak}  extremal subgraph={sorted(res.subgraph)}")

# The value is the same for a graph and its complement.
g = gen_gnp(11, 0.5, seed=3)
print("G(11, 1/2):", graph_functionality_exact(g).value, "complement:", graph_functionality_exact(complement(g)).value)
