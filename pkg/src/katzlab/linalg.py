"""Dense Gaussian elimination with partial pivoting, on numpy arrays.

Hand-rolled on purpose: the closed forms elsewhere in the package are
determinant identities, and the oracles that check them must not share a
factorization backend with anything cleverer.  Row operations are
vectorized, but the algorithm is the textbook one.  Sizes are desk-scale;
everything is capped at :data:`MAX_DENSE_N`.
"""

from __future__ import annotations

import numpy as np

MAX_DENSE_N = 512


class SingularMatrixError(RuntimeError):
    """A zero pivot column turned up; the system has no unique solution."""


def _checked_square(a) -> np.ndarray:
    m = np.array(a, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] > MAX_DENSE_N:
        raise ValueError(f"dense routines are capped at n = {MAX_DENSE_N}, got {m.shape[0]}")
    return m


def solve(a, b) -> np.ndarray:
    """Solve a x = b by elimination with partial pivoting; b may be a matrix."""
    m = _checked_square(a)
    n = m.shape[0]
    rhs = np.array(b, dtype=float)
    vector = rhs.ndim == 1
    if vector:
        rhs = rhs[:, None]
    if rhs.shape[0] != n:
        raise ValueError(f"right-hand side has {rhs.shape[0]} rows, matrix has {n}")

    for col in range(n):
        pivot_row = col + int(np.argmax(np.abs(m[col:, col])))
        pivot = m[pivot_row, col]
        if pivot == 0.0:
            raise SingularMatrixError(f"zero pivot in column {col}")
        if pivot_row != col:
            m[[col, pivot_row]] = m[[pivot_row, col]]
            rhs[[col, pivot_row]] = rhs[[pivot_row, col]]
        factors = m[col + 1 :, col] / pivot
        m[col + 1 :, col:] -= np.outer(factors, m[col, col:])
        rhs[col + 1 :] -= np.outer(factors, rhs[col])

    x = np.empty_like(rhs)
    for row in range(n - 1, -1, -1):
        x[row] = (rhs[row] - m[row, row + 1 :] @ x[row + 1 :]) / m[row, row]
    return x[:, 0] if vector else x


def invert(a) -> np.ndarray:
    """Inverse via elimination against the identity."""
    m = _checked_square(a)
    return solve(m, np.eye(m.shape[0]))


def determinant(a) -> float:
    """Determinant as the signed product of elimination pivots."""
    m = _checked_square(a)
    n = m.shape[0]
    det = 1.0
    for col in range(n):
        pivot_row = col + int(np.argmax(np.abs(m[col:, col])))
        pivot = m[pivot_row, col]
        if pivot == 0.0:
            return 0.0
        if pivot_row != col:
            m[[col, pivot_row]] = m[[pivot_row, col]]
            det = -det
        det *= pivot
        factors = m[col + 1 :, col] / pivot
        m[col + 1 :, col:] -= np.outer(factors, m[col, col:])
    return float(det)
