"""
Distinguishing sets from a probe
================================

Take the first 3 ln n / p vertices as a probe, then add back every outside
vertex whose trace on the probe is shared.  The result separates all outside
vertices, and its size also bounds the functionality from above.
"""

import math

from graphfun import distinguishing_set_from_probe, gen_gnp, is_distinguishing, repetition_number

n, p = 1000, 0.5
sizes = []
for seed in range(10):
    g = gen_gnp(n, p, seed)
    res = distinguishing_set_from_probe(g, p)
    assert is_distinguishing(g, res.vertices)
    sizes.append(res.size)
    if seed == 0:
        probe = range(res.probe_size)
        print(f"probe of {res.probe_size} vertices leaves {repetition_number(g, probe)} repeated traces")

print("sizes over 10 seeds:", sizes)
print(f"comparison target 10 ln n / p = {10 * math.log(n) / p:.1f}")
