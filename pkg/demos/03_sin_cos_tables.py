"""
Sine and cosine over growing domains
====================================

``sin`` and ``cos`` are compared on ``[0, M]`` for ``M`` a multiple of
``pi/2``.  The indices are computed for the pullbacks ``sin(tM)``,
``cos(tM)`` on ``[0, 1]`` and then rescaled: by ``M`` for the L1 index and by
``M**2`` for the other one.
"""

# %%
# Unit-domain indices
# -------------------
import math

from monoindex import trig_table

for scaled, title in ((False, "sin(tM), cos(tM) on [0, 1]"), (True, "sin, cos on [0, M]")):
    print(title)
    print(f"{'M/pi':>6} {'I_sin':>9} {'I_cos':>9} {'L_sin':>9} {'L_cos':>9}")
    for row in trig_table(n=100_000, scaled=scaled):
        print(
            f"{row['M'] / math.pi:6.2f} {row['I_sin']:9.4f} {row['I_cos']:9.4f} "
            f"{row['L_sin']:9.4f} {row['L_cos']:9.4f}"
        )
    print()

# %%
# Reading the tables
# ------------------
# At ``M = 3pi/2`` the two functions have equal indices: ``cos(t)`` is
# ``sin`` flipped upside down and left to right on that domain, and flipping
# that way leaves both indices unchanged.
#
# At ``M = 2pi`` sine goes up, down, then up again while cosine only goes
# down then up, so sine scores as less monotone even though the two are
# rearrangements of each other.
#
# Two cells have simple exact values: cosine on ``[0, pi]`` is decreasing, so
# its sorted version is ``-cos`` and the indices are 4 and 4 exactly.
