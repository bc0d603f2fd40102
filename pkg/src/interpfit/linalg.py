"""Small dense linear algebra: pivoted Gaussian elimination and Vandermonde systems.

Matrices and vectors are plain float64 numpy arrays. Everything here is sized
for desk-scale problems (a few dozen unknowns at most).

The Vandermonde solve (:func:`solve_vandermonde_coeffs`) exists as an
independent cross-check for the interpolation routines. It is *not* the way
to evaluate an interpolant: the Vandermonde matrix becomes badly conditioned
quickly as the number of nodes grows. Use the Lagrange, Newton or Neville
forms in :mod:`interpfit.polyinterp` instead.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, SingularMatrix

PIVOT_TOL = 1e-12


def _as_matrix(A) -> np.ndarray:
    A = np.array(A, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] < 1 or A.shape[1] < 1:
        raise DimensionMismatch(f"expected a non-empty 2-D matrix, got shape {A.shape}")
    return A


def _as_vector(v) -> np.ndarray:
    v = np.array(v, dtype=np.float64).reshape(-1)
    if v.size < 1:
        raise DimensionMismatch("expected a non-empty vector")
    return v


def _eliminate(A: np.ndarray, b: np.ndarray | None):
    """Forward elimination with partial pivoting, in place.

    Returns the number of row swaps. Raises SingularMatrix when a pivot is
    smaller than ``PIVOT_TOL`` times the largest magnitude in the original
    row it came from.
    """
    n = A.shape[0]
    scale = np.abs(A).max(axis=1)
    swaps = 0
    for k in range(n):
        p = k + int(np.argmax(np.abs(A[k:, k])))
        if p != k:
            A[[k, p]] = A[[p, k]]
            scale[[k, p]] = scale[[p, k]]
            if b is not None:
                b[[k, p]] = b[[p, k]]
            swaps += 1
        pivot = A[k, k]
        if scale[k] == 0.0 or abs(pivot) <= PIVOT_TOL * scale[k]:
            raise SingularMatrix(f"pivot {pivot:.3g} in column {k} is below tolerance")
        factors = A[k + 1 :, k] / pivot
        A[k + 1 :, k:] -= np.outer(factors, A[k, k:])
        if b is not None:
            b[k + 1 :] -= factors * b[k]
    return swaps


def solve_dense(A, b) -> np.ndarray:
    """Solve ``A x = b`` by Gaussian elimination with row pivoting."""
    A = _as_matrix(A)
    b = _as_vector(b)
    n = A.shape[0]
    if A.shape[1] != n:
        raise DimensionMismatch(f"matrix must be square, got {A.shape}")
    if b.size != n:
        raise DimensionMismatch(f"rhs has length {b.size}, expected {n}")
    _eliminate(A, b)
    x = np.empty(n)
    for k in range(n - 1, -1, -1):
        x[k] = (b[k] - A[k, k + 1 :] @ x[k + 1 :]) / A[k, k]
    return x


def det_dense(A) -> float:
    """Determinant by elimination; 0.0 when a pivot falls below tolerance."""
    A = _as_matrix(A)
    if A.shape[0] != A.shape[1]:
        raise DimensionMismatch(f"matrix must be square, got {A.shape}")
    try:
        swaps = _eliminate(A, None)
    except SingularMatrix:
        return 0.0
    sign = -1.0 if swaps % 2 else 1.0
    return sign * float(np.prod(np.diag(A)))


def vandermonde_matrix(nodes) -> np.ndarray:
    """Row ``i`` is ``(1, x_i, x_i**2, ..., x_i**n)``."""
    x = _as_vector(nodes)
    return x[:, None] ** np.arange(x.size)[None, :]


def vandermonde_determinant(nodes) -> float:
    """Product of ``x_j - x_i`` over ``i < j``; 1.0 for a single node."""
    x = _as_vector(nodes)
    det = 1.0
    for j in range(1, x.size):
        for i in range(j):
            det *= x[j] - x[i]
    return det


@dataclass(frozen=True)
class PowerPolynomial:
    """``a0 + a1 x + ... + an x**n`` with coefficients in ascending order."""

    coefficients: tuple[float, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        x = np.asarray(x, dtype=np.float64)
        acc = np.zeros_like(x)
        for a in reversed(self.coefficients):
            acc = acc * x + a
        return acc if acc.ndim else float(acc)


def solve_vandermonde_coeffs(samples) -> PowerPolynomial:
    """Power-basis coefficients of the interpolant via the Vandermonde system.

    Intended as an oracle only; see the module docstring.
    """
    coeffs = solve_dense(vandermonde_matrix(samples.x), samples.y)
    return PowerPolynomial(tuple(float(c) for c in coeffs))
