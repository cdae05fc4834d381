"""
Rearranging a sampled function
==============================

A function on ``[0, 1]`` sampled once per cell becomes a step function.  Its
non-decreasing rearrangement is the ascending sort of the samples, and the
two indices measure how far the samples are from that sorted order.
"""

# %%
# A small grid
# ------------
# Three samples, one per third of the unit interval.
import numpy as np

from monoindex import (
    GridFunction,
    cumulative_pair,
    distribution,
    index_I_unit,
    index_L_unit,
    index_L_via_cumulative,
    quantile,
    rearrange,
)

g = GridFunction(np.array([2.0, 1.0, 3.0]))
r = rearrange(g)
print("samples     ", g.values)
print("rearranged  ", r.sorted_values)

# %%
# Distribution function and its inverse
# -------------------------------------
# ``distribution`` is the fraction of the domain where the function sits at or
# below ``x``; ``quantile`` inverts it and reads off the sorted samples.
for x in (0.5, 1.0, 2.5, 3.0):
    print(f"G({x}) = {distribution(g, x):.4f}")
for t in (0.2, 0.5, 1.0):
    print(f"I({t}) = {quantile(r, t)}")

# %%
# The two indices
# ---------------
# ``index_I`` is the mean absolute gap between samples and sorted samples:
# (|1-2| + |2-1| + |3-3|)/3 = 2/3.  ``index_L`` weights the signed gaps by
# position: (1*(1-2) + 2*(2-1) + 3*0)/9 = 1/9.
print("index_I =", index_I_unit(g))
print("index_L =", index_L_unit(g))

# %%
# Cumulative integrals
# --------------------
# ``H`` integrates the step function, ``C`` integrates its rearrangement.  The
# sorted version front-loads the small values, so ``C`` never exceeds ``H``,
# and the mean gap between them is ``index_L`` again.
p = cumulative_pair(g)
print("H =", p.H)
print("C =", p.C)
print("mean(H - C) =", index_L_via_cumulative(g))

# %%
# Monotone input
# --------------
# A non-decreasing function is its own rearrangement; both indices vanish.
up = GridFunction(np.linspace(-1, 1, 9))
print("sorted input:", index_I_unit(up), index_L_unit(up))
