"""Natural cubic splines.

Piece ``j`` on ``[x_j, x_{j+1}]`` is
``S_j(x) = a_j + b_j (x - x_j) + c_j (x - x_j)**2 + d_j (x - x_j)**3``.
Construction is the usual O(n) tridiagonal sweep with ``S''`` pinned to zero
at both ends.

Points outside ``[x_0, x_n]`` are evaluated with the nearest end piece
(extrapolation). Use :meth:`CubicSpline.outside` to find them.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .errors import InvalidOrder, TooFewPoints
from .polyinterp import _points, _shape_like
from .samples import SampleSet


@dataclass(frozen=True, eq=False)
class CubicSpline:
    knots: np.ndarray
    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    d: np.ndarray

    def __post_init__(self):
        for name in ("knots", "a", "b", "c", "d"):
            arr = np.ascontiguousarray(getattr(self, name), dtype=np.float64)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        m = self.knots.size - 1
        if m < 1 or not all(v.size == m for v in (self.a, self.b, self.c, self.d)):
            raise ValueError("need knot count = interval count + 1 and at least one interval")

    @property
    def intervals(self) -> int:
        return self.knots.size - 1

    def outside(self, x) -> np.ndarray:
        t = np.asarray(x, dtype=np.float64)
        return (t < self.knots[0]) | (t > self.knots[-1])

    def piece(self, j: int, x, order: int = 0):
        """Evaluate piece ``j`` (or a derivative of it) without locating ``x``."""
        dx = np.asarray(x, dtype=np.float64) - self.knots[j]
        a, b, c, d = self.a[j], self.b[j], self.c[j], self.d[j]
        if order == 0:
            return a + dx * (b + dx * (c + dx * d))
        if order == 1:
            return b + dx * (2.0 * c + 3.0 * d * dx)
        if order == 2:
            return 2.0 * c + 6.0 * d * dx
        raise InvalidOrder(f"derivative order must be 0, 1 or 2, got {order}")

    def __call__(self, x):
        return spline_eval(self, x)


def natural_cubic_spline(samples: SampleSet) -> CubicSpline:
    if len(samples) < 2:
        raise TooFewPoints("a spline needs at least 2 points")
    b, c, d = kernels.natural_spline(samples.x, samples.y)
    return CubicSpline(samples.x, samples.y[:-1], b, c, d)


def _eval(s: CubicSpline, x, order: int):
    t, scalar = _points(x)
    out = kernels.spline_eval(s.knots, s.a, s.b, s.c, s.d, t, order)
    return _shape_like(out, scalar)


def spline_eval(s: CubicSpline, x):
    return _eval(s, x, 0)


def spline_eval_deriv(s: CubicSpline, x, order: int):
    """First or second derivative. At an interior knot the right-hand piece is used."""
    if order not in (1, 2):
        raise InvalidOrder(f"derivative order must be 1 or 2, got {order}")
    return _eval(s, x, order)
