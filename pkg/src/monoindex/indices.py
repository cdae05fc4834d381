"""Estimators of the two non-monotonicity indices.

For samples ``tau_1..tau_n`` with order statistics ``tau_{1:n} <= ... <= tau_{n:n}``:

* the L1 index is ``(1/n) sum |tau_{i:n} - tau_i|``, the L1 distance between
  the step function and its non-decreasing rearrangement;
* the comonotonically additive index is ``(1/n^2) sum i (tau_{i:n} - tau_i)``,
  equivalently the mean gap between the cumulative integral and its convex
  rearrangement.

On a domain ``[0, M]`` the samples are those of the pullback ``h(t) = f(tM)``
and the indices scale as ``M`` and ``M**2`` respectively.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

import numpy as np

from .corefn import AnalyticFunction, GridFunction, SampleRule, sample
from .rearrangement import cumulative_pair

__all__ = [
    "IndexReport",
    "ConvergenceStep",
    "index_I_unit",
    "index_L_unit",
    "index_L_via_cumulative",
    "index_I",
    "index_L",
    "compute_indices",
    "converge",
    "TRIG_TABLE_M",
    "trig_table",
]


class ConvergenceStep(NamedTuple):
    n: int
    index_I: float
    index_L: float
    gap_I: float | None
    gap_L: float | None


@dataclass(frozen=True)
class IndexReport:
    """Both indices of one grid function.

    ``richardson_gap`` is ``(|I(n) - I(n/2)|, |L(n) - L(n/2)|)`` when the
    report came out of :func:`converge`, else ``None``.  ``converged`` is
    likewise only set by :func:`converge`.
    """

    index_I: float
    index_L: float
    n: int
    M: float
    richardson_gap: tuple[float, float] | None = None
    converged: bool | None = None
    history: tuple[ConvergenceStep, ...] = field(default=(), repr=False)

    def as_dict(self) -> dict:
        d = {"index_I": self.index_I, "index_L": self.index_L, "n": self.n, "M": self.M}
        if self.richardson_gap is not None:
            d["gap_I"], d["gap_L"] = self.richardson_gap
        if self.converged is not None:
            d["converged"] = self.converged
        return d


def _sorted_diff(g: GridFunction) -> np.ndarray:
    return np.sort(g.values) - g.values


def index_I_unit(g: GridFunction) -> float:
    """L1 index of the samples read as a function on ``[0, 1]``."""
    return math.fsum(np.abs(_sorted_diff(g))) / g.n


def index_L_unit(g: GridFunction) -> float:
    """Comonotonically additive index of the samples read on ``[0, 1]``."""
    n = g.n
    weights = np.arange(1, n + 1, dtype=np.float64)
    # fsum is order independent and correctly rounded; the weights reach n
    return math.fsum(weights * _sorted_diff(g)) / (n * n)


def index_L_via_cumulative(g: GridFunction) -> float:
    """Same quantity as :func:`index_L_unit`, via ``mean_k (H_k - C_k)``.

    Kept as an independent route for cross-checking.
    """
    pair = cumulative_pair(g.with_domain(1.0))
    return math.fsum(pair.gap[1:]) / g.n


def _domain(g: GridFunction, M: float | None) -> float:
    M = g.domain_length if M is None else float(M)
    if not (math.isfinite(M) and M > 0):
        raise ValueError(f"domain length M must be positive, got {M!r}")
    return M


def index_I(g: GridFunction, M: float | None = None) -> float:
    """L1 index on ``[0, M]``; ``M`` defaults to the grid's domain length."""
    return _domain(g, M) * index_I_unit(g)


def index_L(g: GridFunction, M: float | None = None) -> float:
    """Comonotonically additive index on ``[0, M]``."""
    M = _domain(g, M)
    return M * M * index_L_unit(g)


def compute_indices(g: GridFunction, M: float | None = None) -> IndexReport:
    M = _domain(g, M)
    return IndexReport(index_I(g, M), index_L(g, M), g.n, M)


def converge(
    f: AnalyticFunction,
    M: float = 1.0,
    n0: int = 128,
    tol: float = 1e-6,
    max_doublings: int = 20,
    rule: SampleRule | str = SampleRule.MIDPOINT,
) -> IndexReport:
    """Refine the grid by doubling until both indices settle.

    Stops at the first ``n`` where both ``|est(n) - est(n/2)|`` are below
    ``tol``.  The doubling gap only stands in for the true discretization
    error, which cannot be computed from samples alone.  If ``max_doublings``
    refinements do not get there the report carries ``converged=False`` and
    the last estimates.
    """
    if int(n0) != n0 or n0 < 2:
        raise ValueError(f"n0 must be an integer >= 2, got {n0!r}")
    if not (tol > 0):
        raise ValueError(f"tol must be positive, got {tol!r}")
    if int(max_doublings) != max_doublings or max_doublings < 1:
        raise ValueError(f"max_doublings must be a positive integer, got {max_doublings!r}")

    n = int(n0)
    g = sample(f, n, rule)
    prev = (index_I(g, M), index_L(g, M))
    history = [ConvergenceStep(n, *prev, None, None)]
    gap = (math.inf, math.inf)
    for _ in range(int(max_doublings)):
        n *= 2
        g = sample(f, n, rule)
        est = (index_I(g, M), index_L(g, M))
        gap = (abs(est[0] - prev[0]), abs(est[1] - prev[1]))
        history.append(ConvergenceStep(n, *est, *gap))
        prev = est
        if gap[0] < tol and gap[1] < tol:
            return IndexReport(*est, n, float(M), gap, True, tuple(history))
    return IndexReport(*prev, n, float(M), gap, False, tuple(history))


TRIG_TABLE_M = (math.pi / 2, math.pi, 3 * math.pi / 2, 2 * math.pi)


def trig_table(
    n: int = 100_000,
    M_values: Iterable[float] = TRIG_TABLE_M,
    scaled: bool = False,
    rule: SampleRule | str = SampleRule.MIDPOINT,
) -> list[dict]:
    """Indices of ``sin`` and ``cos`` for a list of ``M``.

    With ``scaled=False`` the functions are ``sin(tM)``, ``cos(tM)`` on
    ``[0, 1]``; with ``scaled=True`` they are ``sin``, ``cos`` on ``[0, M]``.
    Each row holds ``M`` and the keys ``I_sin, I_cos, L_sin, L_cos``.
    """
    rows = []
    for M in M_values:
        gs = sample(AnalyticFunction.sin(M), n, rule)
        gc = sample(AnalyticFunction.cos(M), n, rule)
        dom = M if scaled else 1.0
        rows.append(
            {
                "M": float(M),
                "I_sin": index_I(gs, dom),
                "I_cos": index_I(gc, dom),
                "L_sin": index_L(gs, dom),
                "L_cos": index_L(gc, dom),
            }
        )
    return rows
