"""Path and cycle graphs with 1-based vertex labels.

Provides the three per-graph quantities everything else consumes: the
adjacency spectral radius (which fixes the admissible decay interval),
hop distance between vertices, and effective resistance.  Closed forms are
paired with brute-force oracles: power iteration for the radius and a
Laplacian-pseudoinverse solve for resistance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg

PATH = "path"
CYCLE = "cycle"
FAMILIES = (PATH, CYCLE)


class AdmissibilityError(ValueError):
    """The decay parameter lies outside the open interval (0, 1/rho(A))."""


@dataclass(frozen=True)
class GraphSpec:
    """A path or cycle graph; vertices are labeled 1..n."""

    family: str
    n: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}, got {self.family!r}")
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise TypeError(f"vertex count must be an integer, got {self.n!r}")
        if self.family == PATH and self.n < 2:
            raise ValueError(f"path graphs need n >= 2, got {self.n}")
        if self.family == CYCLE and self.n < 3:
            raise ValueError(f"cycle graphs need n >= 3, got {self.n}")

    @classmethod
    def path(cls, n: int) -> "GraphSpec":
        return cls(PATH, n)

    @classmethod
    def cycle(cls, n: int) -> "GraphSpec":
        return cls(CYCLE, n)

    @property
    def is_path(self) -> bool:
        return self.family == PATH

    def adjacency(self) -> np.ndarray:
        """Dense adjacency matrix; vertex v maps to row/column v - 1."""
        a = np.zeros((self.n, self.n))
        idx = np.arange(self.n - 1)
        a[idx, idx + 1] = 1.0
        a[idx + 1, idx] = 1.0
        if self.family == CYCLE:
            a[0, self.n - 1] = 1.0
            a[self.n - 1, 0] = 1.0
        return a

    def pairs(self) -> list["VertexPair"]:
        """All unordered vertex pairs i < j in lexicographic order."""
        return [VertexPair(i, j) for i in range(1, self.n) for j in range(i + 1, self.n + 1)]

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or isinstance(v, bool):
            raise TypeError(f"vertex label must be an integer, got {v!r}")
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} out of range 1..{self.n}")


@dataclass(frozen=True, order=True)
class VertexPair:
    """An unordered vertex pair, normalized so i <= j."""

    i: int
    j: int

    @classmethod
    def of(cls, i: int, j: int) -> "VertexPair":
        return cls(min(i, j), max(i, j))


@dataclass(frozen=True)
class Alpha:
    """A decay value validated against the spectral radius of one graph."""

    value: float
    rho: float

    @classmethod
    def bind(cls, value: float, g: GraphSpec) -> "Alpha":
        rho = spectral_radius(g)
        if not 0.0 < value < 1.0 / rho:
            raise AdmissibilityError(
                f"alpha {value} is not admissible for {g.family}({g.n}): "
                f"requires 0 < alpha < {1.0 / rho:.6g}"
            )
        return cls(value, rho)


def require_admissible(value: float, g: GraphSpec, strict: bool = False) -> float:
    """Validate 0 < value < 1/rho(A); with strict=True also require value < 1/2.

    The strict interval is the one on which the d-polynomial bounds (and the
    limit formulas built on them) are proved; paths with small n admit decay
    values above 1/2 that are fine for the closed forms but not for those
    bounds.
    """
    Alpha.bind(value, g)
    if strict and not value < 0.5:
        raise AdmissibilityError(f"alpha {value} rejected: this code path requires alpha < 0.5")
    return float(value)


def spectral_radius(g: GraphSpec) -> float:
    """2 cos(pi/(n+1)) for paths; exactly 2 for cycles."""
    if g.is_path:
        return 2.0 * math.cos(math.pi / (g.n + 1))
    return 2.0


def spectral_radius_oracle(g: GraphSpec, tol: float = 1e-13, max_iter: int = 200000) -> float:
    """Largest adjacency eigenvalue by power iteration (Rayleigh quotient).

    Brute-force cross-check for :func:`spectral_radius`.  Iterates on
    A + 2I rather than A: paths are bipartite, so A alone has a -rho
    eigenvalue of equal magnitude and the unshifted iteration need not
    settle.  The shift makes rho + 2 strictly dominant; deterministic
    start vector, residual-based stopping.
    """
    shifted = g.adjacency() + 2.0 * np.eye(g.n)
    # A strictly positive start vector has a component along the Perron vector.
    v = np.ones(g.n) / math.sqrt(g.n)
    lam = 2.0
    for _ in range(max_iter):
        w = shifted @ v
        v = w / math.sqrt(float(w @ w))
        lam = float(v @ (shifted @ v))
        residual = shifted @ v - lam * v
        if math.sqrt(float(residual @ residual)) < tol:
            break
    return lam - 2.0


def _checked_pair(g: GraphSpec, i: int, j: int) -> tuple[int, int]:
    g.check_vertex(i)
    g.check_vertex(j)
    return (i, j) if i <= j else (j, i)


def graph_distance(g: GraphSpec, i: int, j: int) -> int:
    """Hop distance: j - i on paths, min(j - i, n - (j - i)) on cycles."""
    i, j = _checked_pair(g, i, j)
    if g.is_path:
        return j - i
    return min(j - i, g.n - (j - i))


def resistance(g: GraphSpec, i: int, j: int) -> float:
    """Effective resistance with unit-resistor edges, by closed form.

    Paths: equal to the hop distance (a series chain).  Cycles: the two arcs
    between the vertices act in parallel, k(n-k)/n for arc length k.
    """
    i, j = _checked_pair(g, i, j)
    if g.is_path:
        return float(j - i)
    k = min(j - i, g.n - (j - i))
    return k * (g.n - k) / g.n


def resistance_oracle(g: GraphSpec, i: int, j: int) -> float:
    """Effective resistance via the Laplacian pseudoinverse.

    For a connected graph the pseudoinverse is (L + J/n)^(-1) - J/n with J
    the all-ones matrix; the resistance is then the standard quadratic form
    L+_ii + L+_jj - 2 L+_ij.  Dense solve, so capped at n = 512.
    """
    i, j = _checked_pair(g, i, j)
    a = g.adjacency()
    lap = np.diag(a.sum(axis=1)) - a
    n = g.n
    pinv = linalg.invert(lap + 1.0 / n) - 1.0 / n
    return float(pinv[i - 1, i - 1] + pinv[j - 1, j - 1] - 2.0 * pinv[i - 1, j - 1])
