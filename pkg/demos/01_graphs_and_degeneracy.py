"""
Random graphs and degeneracy
============================

Seeded G(n, p) samples, the edge-list format, and min-degree peeling.
"""

from graphfun import degeneracy, gen_gnp, max_degree, named_family, read_edge_list, write_edge_list

# The same seed always gives the same graph, edge for edge.
g = gen_gnp(2000, 0.005, seed=1)
assert g == gen_gnp(2000, 0.005, seed=1)
print(f"G(2000, 0.005): {g.m} edges, max degree {max_degree(g)}")

# Peeling removes a minimum-degree vertex at a time; the largest degree seen
# at removal time is the degeneracy.
order = degeneracy(g)
print("degeneracy:", order.peak, "(compare 10np =", 10 * 2000 * 0.005, ")")

for p in (0.05, 0.2):
    print(f"p={p}: degeneracy {degeneracy(gen_gnp(2000, p, seed=1)).peak}")

# Plain-text round trip.
q3 = named_family("hypercube", 3)
text = write_edge_list(q3)
print(text.splitlines()[0], "-> header of the 3-cube")
assert read_edge_list(text) == q3
