"""Hermite interpolation: match values and first derivatives at each node."""
from __future__ import annotations

import math

import numpy as np

from ._backend import kernels
from .errors import WrongArity
from .polyinterp import _points, _shape_like, node_polynomial
from .samples import HermiteSampleSet


def hermite_two_point(h: HermiteSampleSet, x):
    """Closed-form cubic through two nodes with prescribed slopes.

    Built from the four cubic cardinal functions (two for values, two for
    slopes); kept separate from :func:`hermite_eval` so each can check the
    other.
    """
    if len(h) != 2:
        raise WrongArity(f"two-point Hermite needs exactly 2 nodes, got {len(h)}")
    x0, x1 = h.x
    y0, y1 = h.y
    d0, d1 = h.dy
    t, scalar = _points(x)
    s0 = ((t - x1) / (x0 - x1)) ** 2
    s1 = ((t - x0) / (x1 - x0)) ** 2
    out = ((1 + 2 * (t - x0) / (x1 - x0)) * y0 + (t - x0) * d0) * s0 + (
        (1 + 2 * (t - x1) / (x0 - x1)) * y1 + (t - x1) * d1
    ) * s1
    return _shape_like(out, scalar)


def lagrange_basis_slope(nodes, j: int) -> float:
    """``l_j'(x_j)``, computed as ``sum_{k != j} 1 / (x_j - x_k)``."""
    nodes = np.asarray(nodes, dtype=np.float64)
    others = np.delete(nodes, j)
    return float(np.sum(1.0 / (nodes[j] - others)))


def hermite_eval(h: HermiteSampleSet, x):
    """Degree ``2n+1`` Hermite interpolant through all nodes."""
    t, scalar = _points(x)
    out = kernels.hermite_eval(h.x, h.y, h.dy, t)
    return _shape_like(out, scalar)


def hermite_error_bound(M: float, nodes, x):
    """``M / (2n+2)! * omega(x)**2`` where ``M`` bounds ``|f^(2n+2)|``."""
    if not M >= 0:
        raise ValueError("derivative bound must be non-negative")
    n1 = np.asarray(nodes).size
    omega = node_polynomial(nodes, x)
    return M / math.factorial(2 * n1) * omega * omega
