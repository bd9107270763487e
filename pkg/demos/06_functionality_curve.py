"""
Bounds on fun(G(n, p)) across p
===============================

Sweep a geometric grid of p values and record degeneracy, distinguishing-set
size, witness size and lower certificates per trial.  The smaller of the two
upper bounds rises and then falls, peaking near sqrt(ln n / n).
"""

import math
from pathlib import Path

from graphfun.experiments import curve_medians, geometric_grid, run_fun_curve

n = 500
grid = geometric_grid(1 / n, 0.5, 15)
result = run_fun_curve(n, grid, trials=5, seed=0)

for p, med in zip(grid, curve_medians(result)):
    print(f"p={p:.4f}  median min(upper bounds)={med:g}")
print(f"p* = {math.sqrt(math.log(n) / n):.4f}")

out = Path("curve_n500.csv")
out.write_text(result.csv(), encoding="utf-8")
print("wrote", out)
