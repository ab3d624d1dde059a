"""Katz similarity on paths and cycles.

The entry (i, j) of the Katz matrix is the decay-weighted count of all
walks between the two vertices, sum over t >= 1 of alpha^t (A^t)_{ij},
which equals ((I - alpha A)^(-1) - I)_{ij} for admissible alpha.  This
module provides the exact closed forms in terms of the d-polynomials, two
independent brute-force oracles (dense inverse and truncated walk series),
and the n -> infinity limits of individual entries.

Closed forms are trusted only where they are derived: cycle graphs with
n <= 4, and every diagonal cycle entry, are answered by the inverse oracle
instead (identical API, documented below).
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .dpoly import d_recursive, d_sequence, d_sequence_exact, ratio_constant
from .graphs import GraphSpec, require_admissible, spectral_radius
from . import linalg

SERIES_ITERATION_CAP = 100000


class SeriesDivergenceError(RuntimeError):
    """The walk series did not meet its tolerance within the iteration cap."""


def _checked_pair(n: int, i: int, j: int) -> tuple[int, int]:
    for v in (i, j):
        if not isinstance(v, int) or isinstance(v, bool):
            raise TypeError(f"vertex label must be an integer, got {v!r}")
        if not 1 <= v <= n:
            raise ValueError(f"vertex {v} out of range 1..{n}")
    return (i, j) if i <= j else (j, i)


def katz_path(n: int, i: int, j: int, alpha: float, strict: bool = False) -> float:
    """Closed-form Katz entry on the n-vertex path.

    For i < j: alpha^(j-i) d_{i-1} d_{n-j} / d_n.  For i = j the same
    product without the power, minus 1 (the diagonal of (I - alpha A)^(-1)
    carries the identity, which the walk sum excludes).

    With strict=True, alpha is confined to (0, 0.5); the default admits the
    full interval (0, 1/rho), which for short paths stretches above 0.5.
    """
    g = GraphSpec.path(n)
    require_admissible(alpha, g, strict)
    i, j = _checked_pair(n, i, j)
    seq = d_sequence(n, alpha)
    core = seq[i - 1] * seq[n - j] / seq[n]
    if i == j:
        return core - 1.0
    return alpha ** (j - i) * core


def katz_cycle(n: int, i: int, j: int, alpha: float, strict: bool = False) -> float:
    """Katz entry on the n-vertex cycle.

    For n >= 5 and i != j: with k = min(j - i, n - (j - i)) the closed form
    (alpha^k d_{n-k-1} + alpha^(n-k) d_{k-1}) / D_n.  The two summands are
    the walk families around the short and long arcs.

    Cycles with n <= 4 and all diagonal entries are answered by the dense
    inverse oracle: those cases sit outside the closed form's derivation,
    so they are oracle-backed rather than extrapolated.
    """
    g = GraphSpec.cycle(n)
    require_admissible(alpha, g, strict)
    i, j = _checked_pair(n, i, j)
    if n <= 4 or i == j:
        return float(katz_oracle_inverse(g, alpha)[i - 1, j - 1])
    k = min(j - i, n - (j - i))
    seq = d_sequence(n - 1, alpha)
    numerator = alpha**k * seq[n - k - 1] + alpha ** (n - k) * seq[k - 1]
    return numerator / (seq[n - 1] - 2.0 * alpha**n - 2.0 * alpha * alpha * seq[n - 2])


def katz_path_matrix(n: int, alpha: float, strict: bool = False) -> np.ndarray:
    """Full closed-form Katz matrix for the path, diagonal included."""
    g = GraphSpec.path(n)
    require_admissible(alpha, g, strict)
    seq = np.array(d_sequence(n, alpha))
    idx = np.arange(1, n + 1)
    lo = np.minimum.outer(idx, idx)
    hi = np.maximum.outer(idx, idx)
    out = alpha ** (hi - lo) * seq[lo - 1] * seq[n - hi] / seq[n]
    np.fill_diagonal(out, np.diag(out) - 1.0)
    return out


def katz_cycle_matrix(n: int, alpha: float, strict: bool = False) -> np.ndarray:
    """Off-diagonal closed-form Katz matrix for the cycle (n >= 5).

    Diagonal entries are set to 0.0 and are NOT Katz values; they are only
    defined through the inverse oracle (see :func:`katz_cycle`).  Callers
    that rank or plot unordered pairs never touch the diagonal.
    """
    g = GraphSpec.cycle(n)
    require_admissible(alpha, g, strict)
    if n <= 4:
        out = katz_oracle_inverse(g, alpha)
        np.fill_diagonal(out, 0.0)
        return out
    seq = np.array(d_sequence(n - 1, alpha))
    denom = seq[n - 1] - 2.0 * alpha**n - 2.0 * alpha * alpha * seq[n - 2]
    idx = np.arange(1, n + 1)
    span = np.abs(np.subtract.outer(idx, idx))
    k = np.minimum(span, n - span)
    out = (alpha**k * seq[n - k - 1] + alpha ** (n - k) * seq[k - 1]) / denom
    np.fill_diagonal(out, 0.0)
    return out


def katz_oracle_inverse(g: GraphSpec, alpha: float) -> np.ndarray:
    """Katz matrix by brute force: invert I - alpha A, subtract I."""
    require_admissible(alpha, g)
    eye = np.eye(g.n)
    return linalg.invert(eye - alpha * g.adjacency()) - eye


def katz_oracle_series(g: GraphSpec, alpha: float, tol: float = 1e-12) -> np.ndarray:
    """Katz matrix by accumulating the walk series alpha^t A^t.

    Stops once max|alpha^t A^t| / (1 - alpha rho) < tol; term norms shrink
    geometrically like (alpha rho)^t, so that ratio bounds the discarded
    tail entrywise by tol.
    """
    require_admissible(alpha, g)
    if not tol > 0.0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    a = g.adjacency()
    margin = 1.0 - alpha * spectral_radius(g)
    term = alpha * a
    total = np.zeros_like(a)
    for _ in range(SERIES_ITERATION_CAP):
        total += term
        if float(np.abs(term).max()) / margin < tol:
            return total
        term = alpha * (term @ a)
    raise SeriesDivergenceError(
        f"walk series still above tolerance after {SERIES_ITERATION_CAP} terms; "
        f"alpha = {alpha} is too close to 1/rho = {1.0 / spectral_radius(g):.6g}"
    )


def katz_path_exact(n: int, i: int, j: int, alpha) -> Fraction:
    """katz_path in exact rational arithmetic.

    alpha may be anything Fraction accepts and must land in (0, 1/2),
    where every d_k is positive for sure; this is the reference used to
    order consecutive convergence gaps once they drop below double
    resolution.
    """
    i, j = _checked_pair(n, i, j)
    a = Fraction(alpha)
    if not 0 < a < Fraction(1, 2):
        raise ValueError(f"exact evaluation needs 0 < alpha < 1/2, got {alpha}")
    seq = d_sequence_exact(n, a)
    core = seq[i - 1] * seq[n - j] / seq[n]
    return core - 1 if i == j else a ** (j - i) * core


def katz_cycle_exact(n: int, i: int, j: int, alpha) -> Fraction:
    """katz_cycle (off-diagonal, n >= 5) in exact rational arithmetic."""
    if n < 5:
        raise ValueError(f"exact cycle evaluation needs n >= 5, got {n}")
    i, j = _checked_pair(n, i, j)
    if i == j:
        raise ValueError("exact cycle evaluation covers off-diagonal pairs only")
    a = Fraction(alpha)
    if not 0 < a < Fraction(1, 2):
        raise ValueError(f"exact evaluation needs 0 < alpha < 1/2, got {alpha}")
    k = min(j - i, n - (j - i))
    seq = d_sequence_exact(n - 1, a)
    numerator = a**k * seq[n - k - 1] + a ** (n - k) * seq[k - 1]
    denominator = seq[n - 1] - 2 * a**n - 2 * a * a * seq[n - 2]
    return numerator / denominator


def katz_limit_path(i: int, j: int, alpha: float) -> float:
    """Limit of katz_path(n, i, j, alpha) as n -> infinity.

    With c = 2/(1 + sqrt(1 - 4 alpha^2)): alpha^(j-i) d_{i-1} c^j for
    i < j, and c^i d_{i-1} - 1 on the diagonal (the trailing d-ratio
    d_{n-j}/d_n tends to c^j).  Only derived for alpha in (0, 0.5).
    """
    if not 0.0 < alpha < 0.5:
        raise ValueError(f"limit formula needs alpha in (0, 0.5), got {alpha}")
    if not 1 <= i <= j:
        raise ValueError(f"need 1 <= i <= j, got ({i}, {j})")
    c = ratio_constant(-1, alpha)
    core = d_recursive(i - 1, alpha) * c**j
    if i == j:
        return core - 1.0
    return alpha ** (j - i) * core


def katz_limit_cycle(offset: int, alpha: float) -> float:
    """Limit of katz_cycle(n, i, i + offset, alpha) as n -> infinity.

    With c = 2/(1 + sqrt(1 - 4 alpha^2)) and q = offset:

        alpha^q c^(q-2) (1 - alpha^4 c^4) / (1 - 4 alpha^2).

    One expression covers both parities of q: c satisfies c = 1 + (alpha c)^2,
    which collapses the separate even/odd forms into the same value.  Checked
    against large-n oracle entries (odd offsets included) in the test suite.
    """
    if not isinstance(offset, int) or isinstance(offset, bool):
        raise TypeError(f"offset must be an integer, got {offset!r}")
    if offset < 1:
        raise ValueError(f"offset must be >= 1, got {offset}")
    if not 0.0 < alpha < 0.5:
        raise ValueError(f"limit formula needs alpha in (0, 0.5), got {alpha}")
    c = ratio_constant(-1, alpha)
    return alpha**offset * c ** (offset - 2) * (1.0 - alpha**4 * c**4) / (1.0 - 4.0 * alpha * alpha)


def determinant_path(n: int, alpha: float) -> float:
    """det(I - alpha A) for the path, by elimination (oracle for d_n)."""
    g = GraphSpec.path(n)
    return linalg.determinant(np.eye(n) - alpha * g.adjacency())


def determinant_cycle(n: int, alpha: float) -> float:
    """det(I - alpha A) for the cycle, by elimination (oracle for D_n)."""
    g = GraphSpec.cycle(n)
    return linalg.determinant(np.eye(n) - alpha * g.adjacency())
