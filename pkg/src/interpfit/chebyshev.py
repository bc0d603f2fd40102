"""Chebyshev polynomials and nodes, plus tools for measuring the Runge effect."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadInterval

DEFAULT_GRID_SIZE = 2001


def chebyshev_T(n: int, x):
    """``T_n(x)`` by the three-term recurrence; valid for any real ``x``."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    x = np.asarray(x, dtype=np.float64)
    prev, cur = np.ones_like(x), x.copy()
    if n == 0:
        cur = prev
    else:
        for _ in range(n - 1):
            prev, cur = cur, 2.0 * x * cur - prev
    return cur if cur.ndim else float(cur)


def _check_interval(a: float, b: float) -> None:
    if not a < b:
        raise BadInterval(f"need a < b, got [{a}, {b}]")


def rescale_interval(t, a: float, b: float):
    """Map ``t`` in ``[-1, 1]`` affinely onto ``[a, b]``."""
    _check_interval(a, b)
    return (t * (b - a) + (a + b)) / 2


@dataclass(frozen=True)
class ChebyshevGrid:
    n: int
    a: float
    b: float
    canonical: tuple[float, ...]
    nodes: tuple[float, ...]


def chebyshev_nodes(n: int, a: float = -1.0, b: float = 1.0) -> ChebyshevGrid:
    """The ``n+1`` roots of ``T_{n+1}``, mapped to ``[a, b]``, ascending."""
    if n < 0:
        raise ValueError("n must be non-negative")
    _check_interval(a, b)
    k = np.arange(n, -1, -1)
    t = np.cos((2 * k + 1) * math.pi / (2 * (n + 1)))
    # enforce exact antisymmetry and an exact zero middle node
    half = (n + 1) // 2
    t[:half] = -t[n + 1 - half :][::-1]
    if n % 2 == 0:
        t[n // 2] = 0.0
    x = rescale_interval(t, a, b)
    return ChebyshevGrid(n, float(a), float(b), tuple(t.tolist()), tuple(x.tolist()))


def equispaced_nodes(n: int, a: float = -1.0, b: float = 1.0) -> np.ndarray:
    _check_interval(a, b)
    return np.linspace(a, b, n + 1)


def runge_function(x):
    x = np.asarray(x, dtype=np.float64)
    out = 1.0 / (1.0 + 25.0 * x * x)
    return out if out.ndim else float(out)


@dataclass(frozen=True)
class ErrorReport:
    grid_size: int
    max_abs_error: float
    location: float


def _on_grid(g, grid):
    out = np.asarray(g(grid), dtype=np.float64)
    if out.shape != grid.shape:
        out = np.broadcast_to(out, grid.shape)
    return out


def max_abs_error(f, interpolant, a: float, b: float, grid_size: int = DEFAULT_GRID_SIZE) -> ErrorReport:
    """Largest ``|f - interpolant|`` over a uniform grid (first location wins ties).

    Both callables receive the whole grid as a numpy array.
    """
    _check_interval(a, b)
    if grid_size < 2:
        raise ValueError("grid_size must be at least 2")
    grid = np.linspace(a, b, grid_size)
    err = np.abs(_on_grid(f, grid) - _on_grid(interpolant, grid))
    k = int(np.argmax(err))
    return ErrorReport(grid_size, float(err[k]), float(grid[k]))
