"""Validated node/value containers shared by the interpolation modules."""
from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, DuplicateNode, TooFewPoints

DUPLICATE_TOL = 1e-12


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=np.float64).reshape(-1)
    arr.setflags(write=False)
    return arr


def _check_nodes(x: np.ndarray) -> None:
    if not np.all(np.isfinite(x)):
        raise ValueError("nodes must be finite")
    if x.size > 1:
        gaps = np.diff(x)
        k = int(np.argmin(gaps))
        if gaps[k] <= DUPLICATE_TOL:
            raise DuplicateNode(f"nodes {float(x[k])!r} and {float(x[k + 1])!r} coincide")


class SampleSet:
    """Interpolation data ``(x_i, y_i)``, sorted ascending by node.

    Nodes closer than ``DUPLICATE_TOL`` are rejected with DuplicateNode.
    """

    __slots__ = ("x", "y")

    def __init__(self, x, y):
        x = np.array(x, dtype=np.float64).reshape(-1)
        y = np.array(y, dtype=np.float64).reshape(-1)
        if x.size != y.size:
            raise DimensionMismatch(f"{x.size} nodes but {y.size} values")
        if x.size < 1:
            raise TooFewPoints("need at least one sample")
        order = np.argsort(x, kind="stable")
        x, y = x[order], y[order]
        _check_nodes(x)
        object.__setattr__(self, "x", _frozen(x))
        object.__setattr__(self, "y", _frozen(y))

    def __setattr__(self, name, value):
        raise AttributeError("SampleSet is immutable")

    @classmethod
    def from_points(cls, points):
        pts = list(points)
        return cls([p[0] for p in pts], [p[1] for p in pts])

    @property
    def n(self) -> int:
        """Polynomial degree supported by the data (number of samples minus one)."""
        return self.x.size - 1

    def __len__(self):
        return self.x.size

    def __iter__(self):
        return iter(zip(self.x.tolist(), self.y.tolist()))

    def __repr__(self):
        return f"SampleSet(x={self.x.tolist()!r}, y={self.y.tolist()!r})"


class HermiteSampleSet:
    """Nodes with values and first derivatives, sorted ascending by node."""

    __slots__ = ("x", "y", "dy")

    def __init__(self, x, y, dy):
        x = np.array(x, dtype=np.float64).reshape(-1)
        y = np.array(y, dtype=np.float64).reshape(-1)
        dy = np.array(dy, dtype=np.float64).reshape(-1)
        if not (x.size == y.size == dy.size):
            raise DimensionMismatch("nodes, values and derivatives differ in length")
        if x.size < 1:
            raise TooFewPoints("need at least one sample")
        order = np.argsort(x, kind="stable")
        x, y, dy = x[order], y[order], dy[order]
        _check_nodes(x)
        object.__setattr__(self, "x", _frozen(x))
        object.__setattr__(self, "y", _frozen(y))
        object.__setattr__(self, "dy", _frozen(dy))

    def __setattr__(self, name, value):
        raise AttributeError("HermiteSampleSet is immutable")

    @property
    def n(self) -> int:
        return self.x.size - 1

    def __len__(self):
        return self.x.size

    def __repr__(self):
        return (
            f"HermiteSampleSet(x={self.x.tolist()!r}, y={self.y.tolist()!r}, "
            f"dy={self.dy.tolist()!r})"
        )
