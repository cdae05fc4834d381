"""Sampled and analytic function representations.

A :class:`GridFunction` holds the values ``tau_1..tau_n`` of a function taken
at one point of each cell of a uniform partition of ``[0, M)``.  It stands for
the step function that equals ``tau_i`` on the i-th cell, which is what every
estimator in this package operates on.

An :class:`AnalyticFunction` is one of a handful of built-in test functions on
``[0, 1]`` that can be turned into a grid with :func:`sample`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

__all__ = [
    "SampleRule",
    "FunctionKind",
    "GridFunction",
    "AnalyticFunction",
    "sample",
    "evaluate",
    "sample_points",
    "step_l1_distance",
]


class SampleRule(str, enum.Enum):
    """Where inside each cell ``[(i-1)/n, i/n)`` the function is sampled."""

    MIDPOINT = "midpoint"
    LEFT = "left"
    RIGHT = "right"

    @property
    def offset(self) -> float:
        return {"midpoint": 0.5, "left": 0.0, "right": 1.0}[self.value]


class FunctionKind(str, enum.Enum):
    SIN = "sin"
    COS = "cos"
    HALPHA = "halpha"
    CONSTANT = "constant"
    PIECEWISE_LINEAR = "piecewise_linear"


def _as_rule(rule: SampleRule | str) -> SampleRule:
    try:
        return SampleRule(rule)
    except ValueError:
        raise ValueError(
            f"unknown sample rule {rule!r}; expected one of "
            f"{[r.value for r in SampleRule]}"
        ) from None


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Samples of a function on a uniform grid of ``[0, domain_length)``.

    ``values[i]`` is the sample taken in cell ``i`` (0-based), so the grid
    represents the step function equal to ``values[i]`` on
    ``[i*M/n, (i+1)*M/n)``.  The array is copied and made read-only.
    """

    values: np.ndarray
    domain_length: float = 1.0
    sample_rule: SampleRule = SampleRule.MIDPOINT

    def __post_init__(self) -> None:
        vals = np.array(self.values, dtype=np.float64, copy=True)
        if vals.ndim != 1:
            raise ValueError("values must be one-dimensional")
        if vals.size < 1:
            raise ValueError("a grid function needs at least one sample")
        if not np.all(np.isfinite(vals)):
            bad = int(np.flatnonzero(~np.isfinite(vals))[0])
            raise ValueError(f"non-finite sample at index {bad}: {vals[bad]!r}")
        M = float(self.domain_length)
        if not (math.isfinite(M) and M > 0):
            raise ValueError(f"domain_length must be positive and finite, got {M!r}")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "domain_length", M)
        object.__setattr__(self, "sample_rule", _as_rule(self.sample_rule))

    @property
    def n(self) -> int:
        return int(self.values.size)

    @property
    def cell_width(self) -> float:
        return self.domain_length / self.n

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return (
            f"GridFunction(n={self.n}, domain_length={self.domain_length!r}, "
            f"sample_rule={self.sample_rule.value!r})"
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GridFunction):
            return NotImplemented
        return (
            self.domain_length == other.domain_length
            and self.sample_rule == other.sample_rule
            and np.array_equal(self.values, other.values)
        )

    __hash__ = None  # type: ignore[assignment]

    def same_grid(self, other: "GridFunction") -> bool:
        return self.n == other.n and self.domain_length == other.domain_length

    def _check_grid(self, other: "GridFunction") -> None:
        if not self.same_grid(other):
            raise ValueError(
                f"grid mismatch: n={self.n}, M={self.domain_length} vs "
                f"n={other.n}, M={other.domain_length}"
            )

    def with_values(self, values) -> "GridFunction":
        return GridFunction(values, self.domain_length, self.sample_rule)

    def with_domain(self, domain_length: float) -> "GridFunction":
        """Same samples, reinterpreted on ``[0, domain_length)``."""
        return GridFunction(self.values, domain_length, self.sample_rule)

    def __add__(self, other):
        if isinstance(other, GridFunction):
            self._check_grid(other)
            return self.with_values(self.values + other.values)
        return self.with_values(self.values + float(other))

    __radd__ = __add__

    def __mul__(self, c):
        return self.with_values(float(c) * self.values)

    __rmul__ = __mul__

    def __neg__(self) -> "GridFunction":
        return self.with_values(-self.values)

    def flipped(self) -> "GridFunction":
        """The function ``t -> -g(M - t)``: upside down and left to right."""
        return self.with_values(-self.values[::-1])

    def __call__(self, t):
        """Evaluate the step function at ``t`` in ``[0, M]``.

        Cells are left-closed; the right endpoint ``t = M`` takes the last
        sample.
        """
        t = np.asarray(t, dtype=np.float64)
        if np.any((t < 0) | (t > self.domain_length)):
            raise ValueError(f"t outside [0, {self.domain_length}]")
        idx = np.floor(t / self.cell_width).astype(np.intp)
        idx = np.minimum(idx, self.n - 1)
        out = self.values[idx]
        return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class AnalyticFunction:
    """A built-in test function on ``[0, 1]``.

    Use the constructors rather than filling ``params`` by hand::

        AnalyticFunction.sin(np.pi)        # t -> sin(pi t)
        AnalyticFunction.halpha(0.25)      # the h_alpha test family
    """

    kind: FunctionKind
    params: tuple = field(default=())

    def __post_init__(self) -> None:
        kind = FunctionKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind in (FunctionKind.SIN, FunctionKind.COS):
            (M,) = self.params
            if not (math.isfinite(M) and M > 0):
                raise ValueError(f"M must be positive and finite, got {M!r}")
        elif kind is FunctionKind.HALPHA:
            (alpha,) = self.params
            if not (0.0 <= alpha <= 1.0):  # also rejects NaN
                raise ValueError(f"alpha must lie in [0, 1], got {alpha!r}")
        elif kind is FunctionKind.CONSTANT:
            (d,) = self.params
            if not math.isfinite(d):
                raise ValueError(f"constant must be finite, got {d!r}")
        else:
            ts = np.array([k[0] for k in self.params], dtype=float)
            ys = np.array([k[1] for k in self.params], dtype=float)
            if ts.size < 2:
                raise ValueError("piecewise-linear function needs at least two knots")
            if not (np.all(np.isfinite(ts)) and np.all(np.isfinite(ys))):
                raise ValueError("knots must be finite")
            if np.any(np.diff(ts) <= 0):
                raise ValueError("knot abscissae must be strictly increasing")
            if ts[0] != 0.0 or ts[-1] != 1.0:
                raise ValueError("knots must span [0, 1]")

    @classmethod
    def sin(cls, M: float) -> "AnalyticFunction":
        return cls(FunctionKind.SIN, (float(M),))

    @classmethod
    def cos(cls, M: float) -> "AnalyticFunction":
        return cls(FunctionKind.COS, (float(M),))

    @classmethod
    def halpha(cls, alpha: float) -> "AnalyticFunction":
        return cls(FunctionKind.HALPHA, (float(alpha),))

    @classmethod
    def constant(cls, d: float) -> "AnalyticFunction":
        return cls(FunctionKind.CONSTANT, (float(d),))

    @classmethod
    def piecewise_linear(cls, knots: Sequence[tuple[float, float]]) -> "AnalyticFunction":
        return cls(
            FunctionKind.PIECEWISE_LINEAR,
            tuple((float(t), float(y)) for t, y in knots),
        )

    def _eval(self, t: np.ndarray) -> np.ndarray:
        kind = self.kind
        if kind is FunctionKind.SIN:
            return np.sin(t * self.params[0])
        if kind is FunctionKind.COS:
            return np.cos(t * self.params[0])
        if kind is FunctionKind.HALPHA:
            a = self.params[0]
            return np.where(t <= 0.5, t, a * t + (1.0 - a) * (1.0 - t))
        if kind is FunctionKind.CONSTANT:
            return np.full_like(t, self.params[0])
        # continuous interpolation, so the bracketing convention at a knot is moot
        ts = np.array([k[0] for k in self.params])
        ys = np.array([k[1] for k in self.params])
        return np.interp(t, ts, ys)

    def __call__(self, t):
        return evaluate(self, t)


def evaluate(f: AnalyticFunction, t):
    """Value of ``f`` at ``t`` (scalar or array) in ``[0, 1]``."""
    arr = np.atleast_1d(np.asarray(t, dtype=np.float64))
    if np.any(np.isnan(arr)) or np.any((arr < 0.0) | (arr > 1.0)):
        raise ValueError(f"t must lie in [0, 1], got {t!r}")
    out = f._eval(arr)
    return float(out[0]) if np.ndim(t) == 0 else out


def sample_points(n: int, rule: SampleRule | str = SampleRule.MIDPOINT) -> np.ndarray:
    """The points ``t_i = (i - 1 + c)/n`` used by :func:`sample`."""
    if int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    n = int(n)
    return (np.arange(n, dtype=np.float64) + _as_rule(rule).offset) / n


def sample(
    f: AnalyticFunction, n: int, rule: SampleRule | str = SampleRule.MIDPOINT
) -> GridFunction:
    """Sample ``f`` once per cell of the uniform n-partition of ``[0, 1)``.

    The right rule evaluates at the cell's right endpoint ``i/n``, i.e. the
    limit from inside the half-open cell.
    """
    rule = _as_rule(rule)
    t = sample_points(n, rule)
    return GridFunction(f._eval(t), 1.0, rule)


def step_l1_distance(a: GridFunction, b: GridFunction) -> float:
    """L1 distance between the step functions of two grids on the same domain.

    One grid size must divide the other; the coarse grid is refined by
    repetition so both live on the fine partition.
    """
    if a.domain_length != b.domain_length:
        raise ValueError("grids live on different domains")
    if a.n > b.n:
        a, b = b, a
    if b.n % a.n:
        raise ValueError(f"grid sizes {a.n} and {b.n} are not nested")
    coarse = np.repeat(a.values, b.n // a.n)
    return math.fsum(np.abs(coarse - b.values)) * b.cell_width
