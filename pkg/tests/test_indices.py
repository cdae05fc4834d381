import math

import numpy as np
import pytest

from monoindex import (
    AnalyticFunction,
    compute_indices,
    converge,
    index_I,
    index_I_unit,
    index_L,
    index_L_unit,
    index_L_via_cumulative,
    sample,
    trig_table,
)

from conftest import grid

PI = math.pi


def test_index_I_unit_hand_values():
    assert index_I_unit(grid([2, 1, 3])) == pytest.approx(2 / 3, rel=1e-15)
    assert index_I_unit(grid([1, 2, 3])) == 0.0
    assert index_I_unit(grid([0, 0, 1, 0])) == 0.5


def test_index_L_unit_hand_values():
    assert index_L_unit(grid([2, 1, 3])) == pytest.approx(1 / 9, rel=1e-15)
    assert index_L_unit(grid([1, 2, 3])) == 0.0
    assert index_L_unit(grid([1, 0])) == 0.25


@pytest.mark.parametrize("values, expected", [([1, 0], 0.25), ([1, 2, 3], 0.0), ([5, 5, 5], 0.0), ([2, 1, 3], 1 / 9)])
def test_index_L_via_cumulative(values, expected):
    assert index_L_via_cumulative(grid(values)) == pytest.approx(expected, rel=1e-15, abs=0)


def test_single_sample_is_zero():
    g = grid([3.7])
    assert (index_I_unit(g), index_L_unit(g)) == (0.0, 0.0)


def test_two_routes_agree_large(rng):
    for n in (10, 1000, 100_000):
        g = grid(rng.uniform(-10, 10, size=n))
        a, b = index_L_unit(g), index_L_via_cumulative(g)
        assert a == pytest.approx(b, rel=1e-12)


def test_table1_paper_cells():
    g_sin = sample(AnalyticFunction.sin(PI), 100_000)
    g_cos = sample(AnalyticFunction.cos(PI), 100_000)
    assert index_I_unit(g_sin) == pytest.approx(0.3183, abs=5e-4)
    assert index_L_unit(g_cos) == pytest.approx(0.4053, abs=5e-4)


def test_exact_values_for_monotone_cos():
    # cos(pi t) is decreasing, its rearrangement is -cos(pi t): I = 4/pi, L = 4/pi^2
    g = sample(AnalyticFunction.cos(PI), 100_000)
    assert index_I_unit(g) == pytest.approx(4 / PI, abs=1e-8)
    assert index_L_unit(g) == pytest.approx(4 / PI**2, abs=1e-8)


def test_scaled_indices_table3_cells():
    n = 100_000
    assert index_I(sample(AnalyticFunction.sin(PI), n), PI) == pytest.approx(1.0, abs=5e-4)
    assert index_I(sample(AnalyticFunction.cos(PI / 2), n), PI / 2) == pytest.approx(0.8284, abs=5e-4)
    assert index_L(sample(AnalyticFunction.sin(2 * PI), n), 2 * PI) == pytest.approx(14.2832, abs=2e-3)
    assert index_L(sample(AnalyticFunction.cos(3 * PI / 2), n), 3 * PI / 2) == pytest.approx(7.5708, abs=2e-3)


def test_scaled_default_uses_grid_domain():
    g = sample(AnalyticFunction.sin(PI), 1000).with_domain(PI)
    assert index_I(g) == PI * index_I_unit(g)
    assert index_L(g) == PI * PI * index_L_unit(g)
    report = compute_indices(g)
    assert (report.index_I, report.index_L, report.n, report.M) == (index_I(g), index_L(g), 1000, PI)


@pytest.mark.parametrize("M", [0.5, 3.0, 17.0])
def test_scaled_zero_for_monotone_and_constant(M):
    ramp = grid(np.linspace(-1, 4, 50))
    assert index_I(ramp, M) == 0.0 and index_L(ramp, M) == 0.0
    const = grid(np.full(20, 3.3))
    assert index_L(const, M) == 0.0


@pytest.mark.parametrize("M", [0.0, -1.0, float("nan")])
def test_scaled_rejects_bad_M(M):
    with pytest.raises(ValueError):
        index_I(grid([1, 0]), M)
    with pytest.raises(ValueError):
        index_L(grid([1, 0]), M)


def test_converge_sin_2pi():
    report = converge(AnalyticFunction.sin(2 * PI), n0=128, tol=1e-4)
    assert report.converged is True
    assert report.index_I == pytest.approx(1.2732, abs=1e-3)
    gi, gl = report.richardson_gap
    assert gi < 1e-4 and gl < 1e-4
    assert report.history[0].n == 128 and report.history[-1].n == report.n


def test_converge_constant_immediately():
    report = converge(AnalyticFunction.constant(7.0), n0=16, tol=1e-12)
    assert report.converged and (report.index_I, report.index_L) == (0.0, 0.0)
    assert len(report.history) == 2 and report.n == 32


def test_converge_halpha_zero():
    report = converge(AnalyticFunction.halpha(0.0), n0=64, tol=1e-5)
    assert report.converged
    assert report.index_I == pytest.approx(1 / 6, abs=1e-4)
    assert report.index_L == pytest.approx(1 / 24, abs=1e-4)


def test_converge_reports_failure():
    report = converge(AnalyticFunction.sin(2 * PI), n0=4, tol=1e-14, max_doublings=3)
    assert report.converged is False
    assert report.n == 32 and len(report.history) == 4
    assert report.index_I == report.history[-1].index_I


def test_converge_scaled():
    report = converge(AnalyticFunction.sin(PI), M=PI, n0=1024, tol=1e-6)
    assert report.index_I == pytest.approx(1.0, abs=5e-4)
    assert report.M == PI


@pytest.mark.parametrize("kwargs", [dict(n0=1), dict(tol=0.0), dict(tol=-1.0), dict(max_doublings=0)])
def test_converge_validation(kwargs):
    with pytest.raises(ValueError):
        converge(AnalyticFunction.constant(1.0), **kwargs)


def test_trig_table_shape():
    rows = trig_table(n=1000)
    assert [r["M"] for r in rows] == pytest.approx([PI / 2, PI, 3 * PI / 2, 2 * PI])
    assert set(rows[0]) == {"M", "I_sin", "I_cos", "L_sin", "L_cos"}
    assert rows[0]["I_sin"] == 0.0
