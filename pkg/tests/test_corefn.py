import math

import numpy as np
import pytest

from monoindex import (
    AnalyticFunction,
    GridFunction,
    SampleRule,
    evaluate,
    sample,
    sample_points,
    step_l1_distance,
)


def test_sample_constant():
    g = sample(AnalyticFunction.constant(5), 3, "midpoint")
    assert g.values.tolist() == [5.0, 5.0, 5.0]
    assert g.domain_length == 1.0
    assert g.sample_rule is SampleRule.MIDPOINT


def test_sample_halpha_zero_midpoints():
    # midpoints 1/8, 3/8, 5/8, 7/8; right branch is 1 - t
    g = sample(AnalyticFunction.halpha(0.0), 4)
    assert g.values.tolist() == pytest.approx([0.125, 0.375, 0.375, 0.125], abs=1e-15)


def test_sample_sin():
    g = sample(AnalyticFunction.sin(math.pi / 2), 2)
    expected = [math.sin(math.pi / 8), math.sin(3 * math.pi / 8)]
    assert g.values.tolist() == pytest.approx(expected, rel=1e-14)
    assert expected == pytest.approx([0.38268, 0.92388], abs=1e-5)


@pytest.mark.parametrize(
    "rule, points",
    [("midpoint", [0.125, 0.375, 0.625, 0.875]), ("left", [0, 0.25, 0.5, 0.75]), ("right", [0.25, 0.5, 0.75, 1.0])],
)
def test_sample_points(rule, points):
    assert sample_points(4, rule).tolist() == points


@pytest.mark.parametrize("n", [0, -3, 2.5])
def test_sample_rejects_bad_n(n):
    with pytest.raises(ValueError):
        sample(AnalyticFunction.constant(1), n)


def test_sample_rejects_bad_rule():
    with pytest.raises(ValueError, match="sample rule"):
        sample(AnalyticFunction.constant(1), 3, "centre")


@pytest.mark.parametrize(
    "make",
    [
        lambda: AnalyticFunction.sin(float("nan")),
        lambda: AnalyticFunction.cos(-1.0),
        lambda: AnalyticFunction.halpha(float("nan")),
        lambda: AnalyticFunction.halpha(1.5),
        lambda: AnalyticFunction.constant(float("inf")),
        lambda: AnalyticFunction.piecewise_linear([(0, 0), (0.5, float("nan")), (1, 1)]),
        lambda: AnalyticFunction.piecewise_linear([(0, 0), (0.5, 1), (0.5, 2), (1, 1)]),
        lambda: AnalyticFunction.piecewise_linear([(0.1, 0), (1, 1)]),
    ],
)
def test_rejects_malformed_functions(make):
    with pytest.raises(ValueError):
        make()


def test_evaluate_examples():
    assert evaluate(AnalyticFunction.halpha(0.3), 0.5) == 0.5
    assert evaluate(AnalyticFunction.halpha(0.0), 1.0) == 0.0
    assert evaluate(AnalyticFunction.cos(math.pi), 1.0) == pytest.approx(-1.0, abs=1e-15)


@pytest.mark.parametrize("t", [-0.01, 1.0001, float("nan")])
def test_evaluate_domain(t):
    with pytest.raises(ValueError):
        evaluate(AnalyticFunction.sin(1.0), t)


def test_piecewise_linear_at_knots():
    f = AnalyticFunction.piecewise_linear([(0, 0), (0.5, 1), (1, -1)])
    assert evaluate(f, 0.5) == 1.0
    assert evaluate(f, 0.25) == 0.5
    assert evaluate(f, 0.75) == 0.0


FUNCTIONS = [
    AnalyticFunction.sin(2 * math.pi),
    AnalyticFunction.cos(3 * math.pi / 2),
    AnalyticFunction.halpha(0.2),
    AnalyticFunction.constant(-2.5),
    AnalyticFunction.piecewise_linear([(0, 1), (0.3, -1), (0.7, 2), (1, 0)]),
]


@pytest.mark.parametrize("f", FUNCTIONS, ids=lambda f: f.kind.value)
@pytest.mark.parametrize("rule", list(SampleRule))
def test_sample_matches_evaluate(f, rule):
    n = 37
    g = sample(f, n, rule)
    for i in range(n):
        t = (i + rule.offset) / n
        assert g.values[i] == evaluate(f, t)


@pytest.mark.parametrize("f", FUNCTIONS, ids=lambda f: f.kind.value)
def test_refinement_gap_shrinks(f):
    gaps = [step_l1_distance(sample(f, n), sample(f, 2 * n)) for n in (100, 1000, 10_000)]
    assert gaps[0] >= gaps[1] >= gaps[2]
    if f.kind.value != "constant":
        assert gaps[2] < gaps[0] / 10


def test_grid_function_validation():
    with pytest.raises(ValueError):
        GridFunction(np.array([]))
    with pytest.raises(ValueError, match="non-finite"):
        GridFunction(np.array([1.0, np.nan]))
    with pytest.raises(ValueError):
        GridFunction(np.array([1.0]), 0.0)
    with pytest.raises(ValueError):
        GridFunction(np.ones((2, 2)))


def test_grid_function_is_immutable():
    src = np.array([1.0, 2.0])
    g = GridFunction(src)
    src[0] = 99
    assert g.values[0] == 1.0
    with pytest.raises(ValueError):
        g.values[0] = 5.0


def test_grid_arithmetic():
    a = GridFunction(np.array([1.0, 2.0, 3.0]), 2.0)
    b = GridFunction(np.array([0.5, 0.0, -1.0]), 2.0)
    assert (a + b).values.tolist() == [1.5, 2.0, 2.0]
    assert (a + 1).values.tolist() == [2.0, 3.0, 4.0]
    assert (2 * a).values.tolist() == [2.0, 4.0, 6.0]
    assert a.flipped().values.tolist() == [-3.0, -2.0, -1.0]
    assert (a + b).domain_length == 2.0
    with pytest.raises(ValueError, match="grid mismatch"):
        a + GridFunction(np.array([1.0, 2.0, 3.0]))


def test_step_function_evaluation():
    g = GridFunction(np.array([1.0, 2.0, 3.0, 4.0]), 2.0)
    assert g(0.0) == 1.0
    assert g(0.49) == 1.0
    assert g(0.5) == 2.0
    assert g(2.0) == 4.0
    with pytest.raises(ValueError):
        g(2.5)


def test_step_l1_distance():
    a = GridFunction(np.array([0.0, 1.0]))
    b = GridFunction(np.array([0.0, 0.5, 1.0, 1.0]))
    # cells of width 1/4: |0-0|, |0-0.5|, |1-1|, |1-1|
    assert step_l1_distance(a, b) == pytest.approx(0.125)
    with pytest.raises(ValueError):
        step_l1_distance(a, GridFunction(np.zeros(3)))
