"""Measure how far a real function is from being non-decreasing.

Two indices are provided.  ``index_I`` is the L1 distance between a function
and its non-decreasing rearrangement.  ``index_L`` weights the signed gap by
``1 - t``; it is additive over comonotonic sums.  Both vanish exactly on
non-decreasing functions and are estimated from samples on a uniform grid.

>>> import numpy as np
>>> from monoindex import AnalyticFunction, sample, index_I, index_L
>>> g = sample(AnalyticFunction.sin(np.pi), 100_000)
>>> round(index_I(g, np.pi), 4), round(index_L(g, np.pi), 4)
(1.0, 0.8584)
"""

from .corefn import (
    AnalyticFunction,
    FunctionKind,
    GridFunction,
    SampleRule,
    evaluate,
    sample,
    sample_points,
    step_l1_distance,
)
from .indices import (
    ConvergenceStep,
    IndexReport,
    compute_indices,
    converge,
    index_I,
    index_I_unit,
    index_L,
    index_L_unit,
    index_L_via_cumulative,
    trig_table,
)
from .oracles import (
    ComonotonicityVerdict,
    HAlphaOracle,
    brute_force_index_I,
    check_comonotonic,
    h_alpha_crossing_point,
    h_alpha_index_I,
    h_alpha_index_L,
    h_alpha_rearrangement,
)
from .rearrangement import (
    CumulativePair,
    Rearrangement,
    cumulative_pair,
    distribution,
    quantile,
    rearrange,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyticFunction",
    "FunctionKind",
    "GridFunction",
    "SampleRule",
    "evaluate",
    "sample",
    "sample_points",
    "step_l1_distance",
    "Rearrangement",
    "CumulativePair",
    "rearrange",
    "distribution",
    "quantile",
    "cumulative_pair",
    "IndexReport",
    "ConvergenceStep",
    "index_I_unit",
    "index_L_unit",
    "index_L_via_cumulative",
    "index_I",
    "index_L",
    "compute_indices",
    "converge",
    "trig_table",
    "HAlphaOracle",
    "ComonotonicityVerdict",
    "h_alpha_index_I",
    "h_alpha_index_L",
    "h_alpha_rearrangement",
    "h_alpha_crossing_point",
    "check_comonotonic",
    "brute_force_index_I",
]
