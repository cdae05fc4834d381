"""Non-decreasing rearrangement of grid functions.

For a step function with values ``tau_1..tau_n`` the distribution function
``G(x)`` counts the cells with ``tau_i <= x`` and its generalized inverse is
the ascending sort of the samples, constant on each ``((i-1)/n, i/n]``.  The
cumulative integrals of the function and of its rearrangement (the latter is
the convex rearrangement of the former) are also provided.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

import numpy as np

from .corefn import GridFunction

__all__ = [
    "Rearrangement",
    "CumulativePair",
    "rearrange",
    "distribution",
    "quantile",
    "cumulative_pair",
    "exact_prefix_sums",
]


@dataclass(frozen=True, eq=False)
class Rearrangement:
    """Ascending samples of a grid function, with the grid they came from."""

    sorted_values: np.ndarray
    source_n: int
    domain_length: float = 1.0

    def __post_init__(self) -> None:
        vals = np.array(self.sorted_values, dtype=np.float64, copy=True)
        if vals.ndim != 1 or vals.size != self.source_n:
            raise ValueError("sorted_values must be 1-d with source_n entries")
        if np.any(np.diff(vals) < 0):
            raise ValueError("sorted_values must be non-decreasing")
        vals.setflags(write=False)
        object.__setattr__(self, "sorted_values", vals)

    def as_grid(self) -> GridFunction:
        return GridFunction(self.sorted_values, self.domain_length)

    def __call__(self, t):
        return quantile(self, t)


@dataclass(frozen=True, eq=False)
class CumulativePair:
    """Prefix integrals ``H_k`` of a grid function and ``C_k`` of its rearrangement.

    Both arrays have ``n + 1`` entries, starting at 0.  ``H_k`` is the
    integral of the step function over the first ``k`` cells and ``C_k`` the
    same for the sorted samples.
    """

    H: np.ndarray
    C: np.ndarray
    domain_length: float = 1.0

    @property
    def n(self) -> int:
        return int(self.H.size - 1)

    @property
    def gap(self) -> np.ndarray:
        return self.H - self.C


def rearrange(g: GridFunction) -> Rearrangement:
    # stable sort; tie order does not affect any index
    return Rearrangement(np.sort(g.values, kind="stable"), g.n, g.domain_length)


def distribution(g: GridFunction, x):
    """Fraction of cells whose sample is ``<= x``.

    Scaled by the domain length this is the measure of ``{t: g(t) <= x}``;
    on the unit domain the two coincide.
    """
    s = np.sort(g.values)
    out = np.searchsorted(s, np.asarray(x, dtype=np.float64), side="right") / g.n
    return float(out) if np.ndim(out) == 0 else out


def _cell(t: float, n: int) -> int:
    """1-based cell ``ceil(t n)`` holding ``t``.

    A product ``t n`` within a few ulps of an integer is snapped to it, so
    decimal inputs such as ``t = 0.1`` or ``0.3`` land on the intended
    boundary whichever way they happened to round.
    """
    if not (0.0 < t <= 1.0):
        raise ValueError(f"t must lie in (0, 1], got {t!r}")
    x = t * n
    k = round(x)
    if abs(x - k) <= 4 * sys.float_info.epsilon * x:
        return max(int(k), 1)
    return math.ceil(x)


def quantile(r: Rearrangement, t):
    """Value of the rearrangement at ``t`` in ``(0, 1]``: ``tau_{ceil(tn):n}``."""
    if np.ndim(t) == 0:
        return float(r.sorted_values[_cell(float(t), r.source_n) - 1])
    idx = [_cell(float(u), r.source_n) - 1 for u in np.ravel(t)]
    return r.sorted_values[idx].reshape(np.shape(t))


def exact_prefix_sums(x) -> np.ndarray:
    """Correctly rounded running sums ``[0, x1, x1+x2, ...]``.

    Keeps the exact running total as a list of non-overlapping partials
    (Shewchuk), so every prefix is the float nearest the true sum.  Because
    rounding is monotone, exact ordering between two families of prefix sums
    survives into floating point.
    """
    vals = np.asarray(x, dtype=np.float64).tolist()
    out = [0.0] * (len(vals) + 1)
    partials: list[float] = []
    fsum = math.fsum
    for k, v in enumerate(vals, 1):
        i = 0
        for y in partials:
            if abs(v) < abs(y):
                v, y = y, v
            hi = v + y
            lo = y - (hi - v)
            if lo:
                partials[i] = lo
                i += 1
            v = hi
        partials[i:] = [v]
        out[k] = fsum(partials)
    return np.array(out)


def cumulative_pair(g: GridFunction) -> CumulativePair:
    w = g.cell_width
    H = exact_prefix_sums(g.values) * w
    C = exact_prefix_sums(np.sort(g.values)) * w
    H.setflags(write=False)
    C.setflags(write=False)
    return CumulativePair(H, C, g.domain_length)
