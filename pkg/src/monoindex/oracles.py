"""Ground truth for testing the estimators.

* Closed forms for the ``h_alpha`` family, which rises linearly on
  ``[0, 1/2]`` and then heads back towards ``alpha`` (non-decreasing exactly
  when ``alpha >= 1/2``).
* An exhaustive pairwise comonotonicity test.
* A brute-force L1 index that goes through the distribution function and its
  generalized inverse instead of sorting.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .corefn import GridFunction

__all__ = [
    "HAlphaOracle",
    "h_alpha_index_I",
    "h_alpha_index_L",
    "h_alpha_rearrangement",
    "h_alpha_crossing_point",
    "ComonotonicityVerdict",
    "check_comonotonic",
    "brute_force_index_I",
    "COMONOTONIC_EPS",
    "BRUTE_FORCE_MAX_N",
]

COMONOTONIC_EPS = 1e-12
BRUTE_FORCE_MAX_N = 12


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not (0.0 <= alpha <= 1.0):
        raise ValueError(f"alpha must lie in [0, 1], got {alpha!r}")
    return alpha


@dataclass(frozen=True)
class HAlphaOracle:
    """Exact quantities for ``h_alpha``.

    ``h_alpha(t) = t`` on ``[0, 1/2]`` and ``alpha t + (1 - alpha)(1 - t)``
    on ``(1/2, 1]``.
    """

    alpha: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", _check_alpha(self.alpha))

    @property
    def monotone(self) -> bool:
        return self.alpha >= 0.5

    def h(self, t):
        a = self.alpha
        t = np.asarray(t, dtype=np.float64)
        out = np.where(t <= 0.5, t, a * t + (1.0 - a) * (1.0 - t))
        return float(out) if out.ndim == 0 else out

    @property
    def index_I(self) -> float:
        a = self.alpha
        if self.monotone:
            return 0.0
        return (1 - 2 * a) * (1 - a) / (2 * (3 - 2 * a))

    @property
    def index_L(self) -> float:
        a = self.alpha
        if self.monotone:
            return 0.0
        return (1 - 2 * a) * (1 - a) / 24

    @property
    def crossing_point(self) -> float:
        """The single point after 1/2 where ``h_alpha`` meets its rearrangement."""
        if self.monotone:
            raise ValueError("h_alpha is non-decreasing for alpha >= 1/2; no crossing point")
        a = self.alpha
        return (a - 2) / (2 * a - 3)

    def distribution(self, x):
        """Measure of ``{t in [0,1]: h_alpha(t) <= x}``, for ``alpha < 1/2``."""
        if self.monotone:
            raise ValueError("closed form covers alpha < 1/2 only")
        a = self.alpha
        x = np.asarray(x, dtype=np.float64)
        mid = (2 - 2 * a) / (1 - 2 * a) * x + a / (2 * a - 1)
        out = np.where(x < 0, 0.0, np.where(x <= a, x, np.where(x <= 0.5, mid, 1.0)))
        return float(out) if out.ndim == 0 else out

    def rearrangement(self, t):
        """Non-decreasing rearrangement of ``h_alpha`` at ``t`` in ``[0, 1]``.

        For ``alpha >= 1/2`` the function is continuous and non-decreasing,
        so it is its own rearrangement.
        """
        t = np.asarray(t, dtype=np.float64)
        if np.any(np.isnan(t)) or np.any((t < 0) | (t > 1)):
            raise ValueError("t must lie in [0, 1]")
        if self.monotone:
            return self.h(t)
        a = self.alpha
        out = np.where(t < a, t, (1 - 2 * a) / (2 - 2 * a) * t + a / (2 - 2 * a))
        return float(out) if out.ndim == 0 else out


def h_alpha_index_I(alpha: float) -> float:
    return HAlphaOracle(alpha).index_I


def h_alpha_index_L(alpha: float) -> float:
    return HAlphaOracle(alpha).index_L


def h_alpha_rearrangement(alpha: float, t):
    return HAlphaOracle(alpha).rearrangement(t)


def h_alpha_crossing_point(alpha: float) -> float:
    return HAlphaOracle(alpha).crossing_point


@dataclass(frozen=True)
class ComonotonicityVerdict:
    """Outcome of :func:`check_comonotonic`.

    ``witness`` is a pair of 0-based grid indices ``(i, j)``, ``i < j``, on
    which the two functions move in opposite directions; ``None`` when the
    functions are comonotonic.
    """

    comonotonic: bool
    witness: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if self.comonotonic == (self.witness is not None):
            raise ValueError("a witness is present exactly when comonotonic is False")

    def __bool__(self) -> bool:
        return self.comonotonic


def check_comonotonic(
    g1: GridFunction, g2: GridFunction, eps: float = COMONOTONIC_EPS
) -> ComonotonicityVerdict:
    """Test ``(tau_i - tau_j)(sigma_i - sigma_j) >= -eps`` over all pairs.

    O(n^2) time, O(n) memory.  The first violating pair in lexicographic
    order is returned as the witness.
    """
    if not g1.same_grid(g2):
        raise ValueError(
            f"grid mismatch: n={g1.n}, M={g1.domain_length} vs n={g2.n}, M={g2.domain_length}"
        )
    a, b = g1.values, g2.values
    for i in range(g1.n - 1):
        prod = (a[i] - a[i + 1 :]) * (b[i] - b[i + 1 :])
        bad = np.flatnonzero(prod < -eps)
        if bad.size:
            return ComonotonicityVerdict(False, (i, i + 1 + int(bad[0])))
    return ComonotonicityVerdict(True)


def brute_force_index_I(g: GridFunction) -> float:
    """L1 index from the definitions, without sorting.

    Builds ``G(x) = #{i: tau_i <= x}/n``, evaluates the generalized inverse
    ``I(t) = inf{x: G(x) >= t}`` at the centre of each cell (``I`` is
    constant on ``((k-1)/n, k/n]``) and integrates ``|h - I|`` cell by cell.
    The infimum of a right-continuous step function is attained at one of
    its jump points, so it is searched over the samples.
    """
    n = g.n
    if n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute force is limited to n <= {BRUTE_FORCE_MAX_N}, got {n}")
    tau = [float(v) for v in g.values]

    def G(x: float) -> float:
        return sum(1 for v in tau if v <= x) / n

    def I(t: float) -> float:
        return min(x for x in tau if G(x) >= t)

    total = 0.0
    for k in range(n):
        total += abs(tau[k] - I((k + 0.5) / n))
    return total / n

