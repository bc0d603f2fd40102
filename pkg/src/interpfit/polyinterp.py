"""Polynomial interpolation: Lagrange, Newton divided differences, Neville.

All three forms produce the same (unique) interpolating polynomial; they
differ in cost and in what can be reused. Newton's form can be extended one
point at a time (:func:`newton_extend`); Neville's tableau gives every
lower-order interpolant at a single point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .errors import DuplicateNode, IndexOutOfRange
from .samples import DUPLICATE_TOL, SampleSet


def _points(x):
    arr = np.asarray(x, dtype=np.float64)
    return np.ascontiguousarray(arr.reshape(-1)), arr.ndim == 0


def _shape_like(out, scalar):
    return float(out[0]) if scalar else out


def lagrange_basis(samples: SampleSet, i: int, x):
    """Cardinal polynomial ``l_i(x) = prod_{j != i} (x - x_j) / (x_i - x_j)``."""
    nodes = samples.x
    if not 0 <= i < nodes.size:
        raise IndexOutOfRange(f"basis index {i} outside 0..{nodes.size - 1}")
    t, scalar = _points(x)
    out = np.ones_like(t)
    xi = nodes[i]
    for j, xj in enumerate(nodes):
        if j != i:
            out = out * ((t - xj) / (xi - xj))
    return _shape_like(out, scalar)


def lagrange_eval(samples: SampleSet, x):
    """Evaluate ``sum y_i l_i(x)``. Exactly reproduces ``y_i`` at node ``x_i``."""
    t, scalar = _points(x)
    out = kernels.lagrange_eval(samples.x, samples.y, t)
    return _shape_like(out, scalar)


@dataclass(frozen=True)
class DividedDifferenceTable:
    """Triangular table; ``rows[k][i] = f[x_i, ..., x_{i+k}]``.

    ``nodes`` keep insertion order, which is what makes one-point extension
    cheap.
    """

    nodes: tuple[float, ...]
    rows: tuple[tuple[float, ...], ...]

    @property
    def top_edge(self) -> tuple[float, ...]:
        return tuple(row[0] for row in self.rows)

    def __len__(self):
        return len(self.nodes)


@dataclass(frozen=True)
class NewtonPolynomial:
    """``c0 + c1 (x - x0) + c2 (x - x0)(x - x1) + ...``"""

    centers: tuple[float, ...]
    coefficients: tuple[float, ...]

    def __post_init__(self):
        if len(self.coefficients) != len(self.centers) + 1:
            raise ValueError("need exactly one more coefficient than centers")

    def __call__(self, x):
        return newton_eval(self, x)


def _table(x: np.ndarray, y: np.ndarray) -> DividedDifferenceTable:
    full = kernels.divided_differences(x, y)
    n = x.size
    rows = tuple(tuple(full[k, : n - k].tolist()) for k in range(n))
    return DividedDifferenceTable(tuple(x.tolist()), rows)


def divided_differences(samples: SampleSet) -> DividedDifferenceTable:
    return _table(samples.x, samples.y)


def _from_table(table: DividedDifferenceTable) -> NewtonPolynomial:
    return NewtonPolynomial(table.nodes[:-1], table.top_edge)


def newton_build(samples: SampleSet) -> NewtonPolynomial:
    return _from_table(divided_differences(samples))


def newton_from_points(x, y) -> tuple[NewtonPolynomial, DividedDifferenceTable]:
    """Newton form for nodes in the given (unsorted) order.

    Useful when points arrive incrementally and will later be passed to
    :func:`newton_extend`.
    """
    x = np.ascontiguousarray(x, dtype=np.float64).reshape(-1)
    y = np.ascontiguousarray(y, dtype=np.float64).reshape(-1)
    SampleSet(x, y)  # validation only
    table = _table(x, y)
    return _from_table(table), table


def newton_eval(p: NewtonPolynomial, x):
    """Nested (Horner-style) evaluation of the Newton form."""
    t, scalar = _points(x)
    out = kernels.newton_eval(
        np.asarray(p.centers, dtype=np.float64),
        np.asarray(p.coefficients, dtype=np.float64),
        t,
    )
    return _shape_like(out, scalar)


def newton_extend(p: NewtonPolynomial, table: DividedDifferenceTable, new_point):
    """Append one point: one new entry per table row, one new coefficient.

    Existing coefficients are carried over untouched.
    """
    xn, yn = float(new_point[0]), float(new_point[1])
    nodes = table.nodes
    for xk in nodes:
        if abs(xn - xk) <= DUPLICATE_TOL:
            raise DuplicateNode(f"node {xn!r} already present")
    m = len(nodes)
    new_rows = []
    below = yn
    new_rows.append(table.rows[0] + (yn,))
    for k in range(1, m + 1):
        prev_last = table.rows[k - 1][-1]
        below = (below - prev_last) / (xn - nodes[m - k])
        old = table.rows[k] if k < m else ()
        new_rows.append(old + (below,))
    new_table = DividedDifferenceTable(nodes + (xn,), tuple(new_rows))
    new_p = NewtonPolynomial(p.centers + (nodes[-1],), p.coefficients + (below,))
    return new_p, new_table


@dataclass(frozen=True)
class NevilleTableau:
    """``values[i][k]`` is the interpolant through nodes ``i..i+k`` evaluated at ``x``."""

    x: float
    nodes: tuple[float, ...]
    values: tuple[tuple[float, ...], ...]

    @property
    def apex(self) -> float:
        return self.values[0][-1]

    def column(self, k: int) -> tuple[float, ...]:
        return tuple(row[k] for row in self.values[: len(self.nodes) - k])


def neville_eval(samples: SampleSet, x: float) -> NevilleTableau:
    x = float(x)
    full = kernels.neville(samples.x, samples.y, x)
    n = samples.x.size
    values = tuple(tuple(full[i, : n - i].tolist()) for i in range(n))
    return NevilleTableau(x, tuple(samples.x.tolist()), values)


@dataclass(frozen=True)
class ErrorBoundQuery:
    """Inputs for the remainder bound: ``M >= max |f^(n+1)|`` over the node hull."""

    derivative_bound: float
    nodes: tuple[float, ...]
    x: float

    def __post_init__(self):
        if not self.derivative_bound >= 0:
            raise ValueError("derivative bound must be non-negative")


def node_polynomial(nodes, x):
    """``omega(x) = prod (x - x_j)``."""
    t, scalar = _points(x)
    out = np.ones_like(t)
    for xj in np.asarray(nodes, dtype=np.float64).reshape(-1):
        out = out * (t - xj)
    return _shape_like(out, scalar)


def interp_error_bound(q: ErrorBoundQuery):
    """``M / (n+1)! * |omega(x)|``; zero at every node."""
    n1 = len(q.nodes)
    omega = np.abs(node_polynomial(q.nodes, q.x))
    return q.derivative_bound / math.factorial(n1) * omega
