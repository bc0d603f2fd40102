"""Least-squares fitting: straight lines, log-linearized exponential/power
laws, and multi-feature linear regression through the normal equations.

Residuals are oriented as ``prediction - observation`` throughout.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateData,
    DimensionMismatch,
    NonPositiveData,
    SingularMatrix,
    SingularNormalMatrix,
)
from .linalg import solve_dense


class ModelKind(enum.Enum):
    LINE = "line"
    EXPONENTIAL = "exp"
    POWER = "power"
    MULTILINEAR = "multilinear"

    @property
    def transform(self):
        """``(feature, target)`` transforms for log-linearized kinds, else None."""
        if self is ModelKind.EXPONENTIAL:
            return ("x", "log y")
        if self is ModelKind.POWER:
            return ("log x", "log y")
        return None


@dataclass(frozen=True, eq=False)
class DesignMatrix:
    """Samples in rows, features in columns; column 0 is the constant 1."""

    X: np.ndarray
    Y: np.ndarray

    def __post_init__(self):
        X = np.array(self.X, dtype=np.float64)
        Y = np.array(self.Y, dtype=np.float64).reshape(-1)
        if X.ndim != 2 or X.shape[0] < 1 or X.shape[1] < 1:
            raise DimensionMismatch(f"X must be a non-empty 2-D array, got shape {X.shape}")
        if Y.size != X.shape[0]:
            raise DimensionMismatch(f"X has {X.shape[0]} rows but Y has {Y.size} entries")
        if not np.all(X[:, 0] == 1.0):
            raise ValueError("column 0 of X must be all ones")
        X.setflags(write=False)
        Y.setflags(write=False)
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Y", Y)

    @classmethod
    def from_features(cls, features, y):
        """Prepend the constant column to raw feature rows."""
        F = np.array(features, dtype=np.float64)
        if F.ndim == 1:
            F = F[:, None]
        return cls(np.column_stack([np.ones(F.shape[0]), F]), y)

    @property
    def m(self) -> int:
        return self.X.shape[0]

    @property
    def n_features(self) -> int:
        return self.X.shape[1]


@dataclass(frozen=True, eq=False)
class FitResult:
    """Fitted parameters.

    ``theta`` is in ascending feature order ``(theta_0, theta_1, ...)`` for
    LINE and MULTILINEAR, so a line is ``(intercept, slope)``. For
    EXPONENTIAL (``y = b e^(a x)``) and POWER (``y = b x^a``) it is ``(a, b)``.
    """

    kind: ModelKind
    theta: np.ndarray
    residuals: np.ndarray
    sse: float

    @property
    def n_samples(self) -> int:
        return self.residuals.size


def _check_theta(d: DesignMatrix, theta) -> np.ndarray:
    theta = np.asarray(theta, dtype=np.float64).reshape(-1)
    if theta.size != d.n_features:
        raise DimensionMismatch(f"theta has {theta.size} entries, X has {d.n_features} columns")
    return theta


def residuals(theta, d: DesignMatrix) -> np.ndarray:
    theta = _check_theta(d, theta)
    return d.X @ theta - d.Y


def cost(d: DesignMatrix, theta, normalized: bool = False) -> float:
    """Sum of squared residuals; with ``normalized`` divided by ``2m``.

    Both forms share the same minimizer.
    """
    r = residuals(theta, d)
    j = float(r @ r)
    return j / (2 * d.m) if normalized else j


def cost_gradient(d: DesignMatrix, theta) -> np.ndarray:
    """Gradient of the un-normalized cost, ``2 X^T (X theta - Y)``."""
    return 2.0 * (d.X.T @ residuals(theta, d))


def _result(kind, theta, r) -> FitResult:
    return FitResult(kind, np.asarray(theta, dtype=np.float64), r, float(r @ r))


def fit_normal_equations(d: DesignMatrix) -> FitResult:
    """Solve ``(X^T X) theta = X^T Y``.

    Columns are equilibrated to unit max-magnitude before forming ``X^T X``;
    this changes nothing mathematically but keeps the elimination well
    conditioned when features differ wildly in scale.
    """
    X, Y = d.X, d.Y
    scale = np.abs(X).max(axis=0)
    if np.any(scale == 0.0):
        raise SingularNormalMatrix("a feature column is identically zero")
    Xs = X / scale
    try:
        z = solve_dense(Xs.T @ Xs, Xs.T @ Y)
    except SingularMatrix as exc:
        raise SingularNormalMatrix(f"normal matrix is rank deficient ({exc})") from None
    theta = z / scale
    return _result(ModelKind.MULTILINEAR, theta, X @ theta - Y)


def _xy(x, y):
    x = np.asarray(x, dtype=np.float64).reshape(-1)
    y = np.asarray(y, dtype=np.float64).reshape(-1)
    if x.size != y.size:
        raise DimensionMismatch(f"{x.size} x values but {y.size} y values")
    return x, y


def fit_line(x, y) -> FitResult:
    """Least-squares line ``y = a x + b`` minimizing vertical residuals.

    Uses the centered-sums closed form; ``theta = (b, a)``.
    """
    x, y = _xy(x, y)
    if x.size < 2 or np.all(x == x[0]):
        raise DegenerateData("a line fit needs at least two distinct x values")
    mx, my = x.mean(), y.mean()
    dx = x - mx
    a = float(dx @ (y - my) / (dx @ dx))
    b = float(my - a * mx)
    return _result(ModelKind.LINE, (b, a), (a * x + b) - y)


def fit_transformed(x, y, kind: ModelKind) -> FitResult:
    """Fit ``y = b e^(a x)`` or ``y = b x^a`` by linear least squares on ``log y``.

    The returned ``sse`` is measured against the original data, not the
    logged values; on noisy data it is not the minimum of that objective.
    """
    x, y = _xy(x, y)
    if kind not in (ModelKind.EXPONENTIAL, ModelKind.POWER):
        raise ValueError(f"fit_transformed handles exponential/power models, not {kind}")
    if np.any(y <= 0):
        raise NonPositiveData("log-linearization needs all y > 0")
    if kind is ModelKind.POWER:
        if np.any(x <= 0):
            raise NonPositiveData("a power-law fit needs all x > 0")
        feature = np.log(x)
    else:
        feature = x
    lin = fit_normal_equations(DesignMatrix.from_features(feature, np.log(y)))
    log_b, a = lin.theta
    b = float(np.exp(log_b))
    if kind is ModelKind.EXPONENTIAL:
        pred = b * np.exp(a * x)
    else:
        pred = b * x**a
    return _result(kind, (float(a), b), pred - y)
