"""
How fine a grid is fine enough
==============================

The estimators converge as the grid is refined, but the true discretization
error depends on the function between the samples.  Doubling the grid and
watching the change is a practical stand-in.
"""

# %%
# Doubling until the estimates settle
# -----------------------------------
import math

from monoindex import AnalyticFunction, converge, index_I_unit, sample

report = converge(AnalyticFunction.sin(2 * math.pi), n0=128, tol=1e-8)
print(f"{'n':>8} {'index_I':>12} {'index_L':>12} {'gap_I':>10} {'gap_L':>10}")
for step in report.history:
    gi = "-" if step.gap_I is None else f"{step.gap_I:.2e}"
    gl = "-" if step.gap_L is None else f"{step.gap_L:.2e}"
    print(f"{step.n:8d} {step.index_I:12.8f} {step.index_L:12.8f} {gi:>10} {gl:>10}")
print("converged:", report.converged)

# %%
# Each doubling shrinks the change by about a factor of four for this smooth
# function.

# %%
# Where to sample inside each cell
# --------------------------------
# Any point of a cell gives a convergent estimator; the midpoint is usually
# the most accurate.  ``cos(pi t)`` has the exact L1 index ``4/pi``.
exact = 4 / math.pi
for rule in ("left", "midpoint", "right"):
    errs = [abs(index_I_unit(sample(AnalyticFunction.cos(math.pi), n, rule)) - exact) for n in (100, 1000, 10_000)]
    print(f"{rule:>8}: " + "  ".join(f"{e:.2e}" for e in errs))

# %%
# A budget that is too small is reported rather than hidden.
short = converge(AnalyticFunction.sin(2 * math.pi), n0=8, tol=1e-12, max_doublings=4)
print("converged:", short.converged, "last n:", short.n, "gaps:", short.richardson_gap)
