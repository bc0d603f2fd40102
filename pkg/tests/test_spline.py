import gc
import time

import numpy as np
import pytest

from interpfit import (
    CubicSpline,
    DuplicateNode,
    InvalidOrder,
    SampleSet,
    TooFewPoints,
    natural_cubic_spline,
    solve_dense,
    spline_eval,
    spline_eval_deriv,
)

HAT = SampleSet([0, 1, 2], [0, 1, 0])


def assembled_system_spline(x, y):
    """Oracle: assemble all 4n spline conditions and solve them directly.

    Unknowns are ordered (a_0, b_0, c_0, d_0, a_1, ...).
    """
    n = len(x) - 1
    A = np.zeros((4 * n, 4 * n))
    rhs = np.zeros(4 * n)
    row = 0

    def value(j, t):
        h = t - x[j]
        return [1, h, h * h, h**3]

    def slope(j, t):
        h = t - x[j]
        return [0, 1, 2 * h, 3 * h * h]

    def curve(j, t):
        h = t - x[j]
        return [0, 0, 2, 6 * h]

    for j in range(n):
        A[row, 4 * j : 4 * j + 4] = value(j, x[j])
        rhs[row] = y[j]
        row += 1
        A[row, 4 * j : 4 * j + 4] = value(j, x[j + 1])
        rhs[row] = y[j + 1]
        row += 1
    for j in range(n - 1):
        for fn in (slope, curve):
            A[row, 4 * j : 4 * j + 4] = fn(j, x[j + 1])
            A[row, 4 * j + 4 : 4 * j + 8] = -np.array(fn(j + 1, x[j + 1]))
            row += 1
    A[row, 0:4] = curve(0, x[0])
    row += 1
    A[row, 4 * n - 4 :] = curve(n - 1, x[n])
    row += 1
    assert row == 4 * n
    return solve_dense(A, rhs).reshape(n, 4)


def test_collinear_data(backend):
    s = natural_cubic_spline(SampleSet([0, 1, 2], [0, 2, 4]))
    assert s.c.tolist() == [0, 0] and s.d.tolist() == [0, 0] and s.b.tolist() == [2, 2]
    assert spline_eval(s, 1.5) == 3


def test_hand_derived_three_knots(backend):
    s = natural_cubic_spline(HAT)
    np.testing.assert_allclose(s.c, [0, -1.5], atol=1e-12)
    np.testing.assert_allclose(s.b, [1.5, 0], atol=1e-12)
    np.testing.assert_allclose(s.d, [-0.5, 0.5], atol=1e-12)
    assert spline_eval(s, 0.5) == pytest.approx(0.6875, abs=1e-15)


def test_two_points_give_segment(backend):
    s = natural_cubic_spline(SampleSet([0, 1], [0, 5]))
    assert (s.b.tolist(), s.c.tolist(), s.d.tolist()) == ([5.0], [0.0], [0.0])


def test_errors():
    with pytest.raises(TooFewPoints):
        natural_cubic_spline(SampleSet([0], [1]))
    with pytest.raises(DuplicateNode):
        natural_cubic_spline(SampleSet([0, 1, 1], [0, 1, 2]))
    with pytest.raises(InvalidOrder):
        spline_eval_deriv(natural_cubic_spline(HAT), 0.5, 3)
    with pytest.raises(ValueError):
        CubicSpline([0.0], [], [], [], [])


def test_knot_values_and_slopes(backend):
    s = natural_cubic_spline(HAT)
    for j, xj in enumerate(s.knots[:-1]):
        assert spline_eval(s, xj) == s.a[j]
    assert s.piece(0, 1.0, order=1) == pytest.approx(0.0, abs=1e-15)
    assert spline_eval_deriv(s, 1.0, 1) == pytest.approx(0.0, abs=1e-15)
    assert spline_eval_deriv(s, 0.0, 2) == 0
    assert spline_eval_deriv(s, 2.0, 2) == pytest.approx(0.0, abs=1e-15)


def test_extrapolation_uses_end_pieces(backend):
    s = natural_cubic_spline(HAT)
    assert spline_eval(s, -1.0) == pytest.approx(float(s.piece(0, -1.0)))
    assert spline_eval(s, 3.0) == pytest.approx(float(s.piece(1, 3.0)))
    assert s.outside([-1.0, 0.0, 2.0, 2.5]).tolist() == [True, False, False, True]


def _random_spline(rng, n):
    x = np.cumsum(rng.uniform(0.1, 1.0, n + 1))
    y = rng.normal(size=n + 1)
    return x, y, natural_cubic_spline(SampleSet(x, y))


def test_interpolation_and_continuity(backend, rng):
    for n in (1, 2, 5, 17, 50):
        x, y, s = _random_spline(rng, n)
        assert np.max(np.abs(spline_eval(s, x) - y)) < 1e-10
        for j in range(1, n):
            for order in (0, 1, 2):
                left = s.piece(j - 1, x[j], order)
                right = s.piece(j, x[j], order)
                assert abs(left - right) < 1e-8
        assert abs(spline_eval_deriv(s, x[0], 2)) < 1e-10
        assert abs(spline_eval_deriv(s, x[-1], 2)) < 1e-10


def test_linear_reproduction(backend, rng):
    for _ in range(10):
        x = np.cumsum(rng.uniform(0.1, 1.0, 12))
        s = natural_cubic_spline(SampleSet(x, 3.5 * x - 2.0))
        assert np.max(np.abs(s.c)) < 1e-10 and np.max(np.abs(s.d)) < 1e-10


def test_matches_assembled_system(backend, rng):
    for n in range(1, 7):
        for _ in range(5):
            x, y, s = _random_spline(rng, n)
            ref = assembled_system_spline(x, y)
            got = np.column_stack([s.a, s.b, s.c, s.d])
            assert np.max(np.abs(got - ref)) < 1e-7


def _best_time(fn, repeats=5):
    best = float("inf")
    gc.disable()
    try:
        for _ in range(repeats):
            t0 = time.perf_counter()
            fn()
            best = min(best, time.perf_counter() - t0)
    finally:
        gc.enable()
    return best


def test_construction_scales_linearly(backend):
    rng = np.random.default_rng(3)
    n = 100_000
    small = SampleSet(np.arange(n + 1.0), rng.normal(size=n + 1))
    large = SampleSet(np.arange(2 * n + 1.0), rng.normal(size=2 * n + 1))
    t1 = _best_time(lambda: natural_cubic_spline(small))
    t2 = _best_time(lambda: natural_cubic_spline(large))
    assert t2 / t1 < 2.5
