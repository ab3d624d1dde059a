"""Pair rankings under Katz similarity, effective resistance, and distance.

A ranking prefers higher Katz but lower resistance and lower distance.  Two
metrics *agree* when no strict preference under one is strictly reversed by
the other; refining a tie is not a disagreement.  (Resistance ties every
equal-distance pair on a path while Katz splits those ties at any decay
value, so demanding identical tie classes would call the metrics
"disagreeing" even in the regime where every cross-class comparison
matches.  The inversion-free criterion is what the ranking statements
actually assert, and the tie-class comparison is exposed separately via
:func:`score_classes` / :func:`class_structures_match` for the cycle case,
where the classes genuinely coincide.)

Also here: the gap polynomials whose sign tracks whether a distance-j pair
can be out-ranked by a distance-(j+1) pair on a path, and bisection for the
decay cut-off in (1/sqrt 5, 1/2) where that first happens.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .dpoly import INV_SQRT5, d_sequence
from .graphs import GraphSpec, VertexPair, graph_distance, require_admissible, resistance
from .katz import katz_cycle_matrix, katz_path, katz_path_matrix

KATZ = "katz"
RESISTANCE = "resistance"
DISTANCE = "distance"
METRICS = (KATZ, RESISTANCE, DISTANCE)

# Scores closer than this are one tie class; absorbs float noise in
# theoretically-equal scores (e.g. cycle pairs on equal-length arcs).
TIE_TOL = 1e-11

BRACKET_LO = INV_SQRT5
BRACKET_HI = 0.5
BISECTION_ITERATION_CAP = 200


@dataclass(frozen=True)
class PairRanking:
    """All unordered pairs of one graph, best-first under one metric."""

    graph: GraphSpec
    metric: str
    alpha: Optional[float]
    entries: tuple[tuple[VertexPair, float], ...]


@dataclass(frozen=True)
class RankingInversion:
    """A strict preference reversal between two metrics.

    metric_a strictly prefers pair_a over pair_b while metric_b strictly
    prefers pair_b over pair_a; scores_a/scores_b hold (pair_a, pair_b)
    scores under the respective metric.
    """

    metric_a: str
    metric_b: str
    pair_a: VertexPair
    pair_b: VertexPair
    scores_a: tuple[float, float]
    scores_b: tuple[float, float]


@dataclass(frozen=True)
class AgreementReport:
    graph: GraphSpec
    alpha: float
    katz_vs_resistance: bool
    katz_vs_distance: bool
    resistance_vs_distance: bool
    witness: Optional[RankingInversion]

    def all_agree(self) -> bool:
        return self.katz_vs_resistance and self.katz_vs_distance and self.resistance_vs_distance


def pair_scores(g: GraphSpec, metric: str, alpha: Optional[float] = None) -> list[float]:
    """Scores for g.pairs() in lexicographic pair order."""
    if metric not in METRICS:
        raise ValueError(f"metric must be one of {METRICS}, got {metric!r}")
    if metric == KATZ:
        if alpha is None:
            raise ValueError("the katz metric needs an alpha value")
        matrix = katz_path_matrix(g.n, alpha) if g.is_path else katz_cycle_matrix(g.n, alpha)
        return [float(matrix[p.i - 1, p.j - 1]) for p in g.pairs()]
    if metric == RESISTANCE:
        return [resistance(g, p.i, p.j) for p in g.pairs()]
    return [float(graph_distance(g, p.i, p.j)) for p in g.pairs()]


def _preference_keys(g: GraphSpec, metric: str, alpha: Optional[float]) -> np.ndarray:
    """Scores mapped so that smaller always means more preferred."""
    scores = np.array(pair_scores(g, metric, alpha))
    return -scores if metric == KATZ else scores


def rank_pairs(g: GraphSpec, metric: str, alpha: Optional[float] = None) -> PairRanking:
    """Pairs sorted best-first; exact score ties break (i, j) lexicographically."""
    pairs = g.pairs()
    scores = pair_scores(g, metric, alpha)
    sign = -1.0 if metric == KATZ else 1.0
    order = sorted(range(len(pairs)), key=lambda ix: (sign * scores[ix], pairs[ix]))
    entries = tuple((pairs[ix], scores[ix]) for ix in order)
    return PairRanking(g, metric, alpha if metric == KATZ else None, entries)


def score_classes(
    g: GraphSpec, metric: str, alpha: Optional[float] = None, tol: float = TIE_TOL
) -> list[set[VertexPair]]:
    """Tie classes best-first: consecutive ranked scores within tol merge.

    Ties are judged relative to the larger magnitude: theoretically-equal
    scores come out of one vectorized expression and match to the last
    bit, while genuinely distinct Katz classes on a large cycle at small
    decay sit many orders of magnitude apart yet all below any fixed
    absolute tolerance, which would merge them spuriously.
    """
    ranking = rank_pairs(g, metric, alpha)
    classes: list[set[VertexPair]] = []
    last_score: Optional[float] = None
    for pair, score in ranking.entries:
        if last_score is None or abs(score - last_score) > tol * max(abs(score), abs(last_score)):
            classes.append(set())
        classes[-1].add(pair)
        last_score = score
    return classes


def class_structures_match(g: GraphSpec, alpha: float, tol: float = TIE_TOL) -> bool:
    """True when all three metrics produce identical best-first tie classes."""
    reference = score_classes(g, KATZ, alpha, tol)
    return all(score_classes(g, metric, alpha, tol) == reference for metric in (RESISTANCE, DISTANCE))


def _first_inversion(
    g: GraphSpec,
    metric_a: str,
    metric_b: str,
    keys_a: np.ndarray,
    keys_b: np.ndarray,
    scores: dict[str, list[float]],
) -> Optional[RankingInversion]:
    strict_a = keys_a[:, None] < keys_a[None, :] - TIE_TOL
    strict_b_reversed = keys_b[:, None] > keys_b[None, :] + TIE_TOL
    violations = np.argwhere(strict_a & strict_b_reversed)
    if violations.size == 0:
        return None
    a_ix, b_ix = (int(v) for v in violations[0])
    pairs = g.pairs()
    return RankingInversion(
        metric_a,
        metric_b,
        pairs[a_ix],
        pairs[b_ix],
        (scores[metric_a][a_ix], scores[metric_a][b_ix]),
        (scores[metric_b][a_ix], scores[metric_b][b_ix]),
    )


def agreement(g: GraphSpec, alpha: float) -> AgreementReport:
    """Pairwise ranking agreement between the three metrics at one alpha.

    Exhaustive over pairs-of-pairs; the witness is the first inversion found
    (deterministic lexicographic scan) among the disagreeing metric pairs.
    """
    require_admissible(alpha, g)
    scores = {m: pair_scores(g, m, alpha) for m in METRICS}
    keys = {
        m: (-np.array(scores[m]) if m == KATZ else np.array(scores[m])) for m in METRICS
    }
    flags: dict[tuple[str, str], bool] = {}
    witness: Optional[RankingInversion] = None
    for metric_a, metric_b in ((KATZ, RESISTANCE), (KATZ, DISTANCE), (RESISTANCE, DISTANCE)):
        inv = _first_inversion(g, metric_a, metric_b, keys[metric_a], keys[metric_b], scores)
        flags[(metric_a, metric_b)] = inv is None
        if witness is None and inv is not None:
            witness = inv
    return AgreementReport(
        g,
        alpha,
        flags[(KATZ, RESISTANCE)],
        flags[(KATZ, DISTANCE)],
        flags[(RESISTANCE, DISTANCE)],
        witness,
    )


def _gap_midpoint(n: int, j: int) -> int:
    if not isinstance(j, int) or isinstance(j, bool) or j < 1:
        raise ValueError(f"offset j must be a positive integer, got {j!r}")
    if n - j < 2:
        raise ValueError(f"gap polynomial needs n - j >= 2, got n = {n}, j = {j}")
    return (n - j + 1) // 2


def p_gap(n: int, j: int, alpha: float) -> float:
    """Worst-case Katz gap between distance-j and distance-(j+1) path pairs.

    katz(1, 1+j) - katz(m, m+j+1) with m = ceil((n-j)/2): the weakest
    distance-j pair sits at the boundary, the strongest distance-(j+1) pair
    at the center.  Positive means the distance classes stay separated.
    """
    m = _gap_midpoint(n, j)
    return katz_path(n, 1, 1 + j, alpha) - katz_path(n, m, m + j + 1, alpha)


def p_tilde(n: int, j: int, alpha: float) -> float:
    """Sign-equivalent reduction of :func:`p_gap`.

    d_{n-j-1} - alpha d_{m-1} d_{n-m-j-1} with m = ceil((n-j)/2); shares the
    sign of p_gap everywhere but is a plain polynomial, which makes it the
    bisection target for cut-off roots.
    """
    m = _gap_midpoint(n, j)
    seq = d_sequence(n - j - 1, alpha)
    return seq[n - j - 1] - alpha * seq[m - 1] * seq[n - m - j - 1]


class BracketError(RuntimeError):
    """The bisection bracket endpoints do not straddle a sign change."""


class BisectionDivergenceError(RuntimeError):
    """Bisection failed to shrink the bracket to tolerance within the cap."""


@dataclass(frozen=True)
class CutoffResult:
    """A converged bisection run on p_tilde(n, j, .)."""

    n: int
    j: int
    bracket_lo: float
    bracket_hi: float
    root: float
    iterations: int
    residual: float


def cutoff_root(n: int, j: int, tol: float = 1e-15) -> CutoffResult:
    """Bisection root of p_tilde(n, j, .) on (1/sqrt 5, 1/2).

    Endpoints start nudged inward by 1e-12 so both evaluations are
    sign-determinate.  The root approaches the left endpoint geometrically
    in n (it sits within 1e-12 of 1/sqrt 5 once n - j >= 54), so when the
    left probe lands at or past the root (reads <= 0) the nudge is shrunk
    by factors of 10 down to one ulp until the probe is positive again;
    bracket_lo records the endpoint actually used.  If the left value
    instead reads exactly zero at the smallest nudge, the endpoint is
    shifted right in 1e-6 steps until the sign resolves.  Raises
    BracketError when no sign change can be established, which is the
    expected outcome for n - j < 5.
    """
    if not tol > 0.0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    hi = BRACKET_HI - 1e-12
    nudge = 1e-12
    lo = BRACKET_LO + nudge
    f_lo = p_tilde(n, j, lo)
    while f_lo <= 0.0 and nudge > 1e-16:
        nudge /= 10.0
        lo = max(BRACKET_LO + nudge, math.nextafter(BRACKET_LO, BRACKET_HI))
        f_lo = p_tilde(n, j, lo)
    while f_lo == 0.0 and lo < hi:
        lo += 1e-6
        f_lo = p_tilde(n, j, lo)
    f_hi = p_tilde(n, j, hi)
    if not (f_lo > 0.0 > f_hi):
        raise BracketError(
            f"no sign change for n = {n}, j = {j}: "
            f"p_tilde({lo:.17g}) = {f_lo:.3e}, p_tilde({hi:.17g}) = {f_hi:.3e}"
            + (" (n - j < 5 has no root here)" if n - j < 5 else "")
        )
    bracket_lo, bracket_hi = lo, hi
    iterations = 0
    while hi - lo > tol:
        if iterations >= BISECTION_ITERATION_CAP:
            raise BisectionDivergenceError(
                f"bracket still {hi - lo:.3e} wide after {iterations} bisections"
            )
        iterations += 1
        mid = 0.5 * (lo + hi)
        f_mid = p_tilde(n, j, mid)
        if f_mid > 0.0:
            lo = mid
        elif f_mid < 0.0:
            hi = mid
        else:
            lo = hi = mid
    root = 0.5 * (lo + hi)
    return CutoffResult(n, j, bracket_lo, bracket_hi, root, iterations, abs(p_tilde(n, j, root)))


def cutoff_table(j: int, n_range, tol: float = 1e-15) -> list[CutoffResult]:
    """cutoff_root for every n in n_range (each must satisfy n - j >= 5)."""
    ns = list(n_range)
    for n in ns:
        if n - j < 5:
            raise ValueError(f"cutoff_table needs n - j >= 5 for every n; n = {n}, j = {j}")
    return [cutoff_root(n, j, tol) for n in ns]


def cycle_numerator_gap(n: int, k: int, alpha: float) -> float:
    """Numerator difference between arc classes k and k+1 on the n-cycle.

    alpha^k d_{n-k-1} + alpha^(n-k) d_{k-1} - alpha^(k+1) d_{n-k-2}
    - alpha^(n-k-1) d_k; positive exactly when arc-k pairs out-rank
    arc-(k+1) pairs under Katz.
    """
    if not isinstance(k, int) or isinstance(k, bool):
        raise TypeError(f"arc length must be an integer, got {k!r}")
    if not 1 <= k < n // 2:
        raise ValueError(f"need 1 <= k < n//2, got k = {k}, n = {n}")
    if not 0.0 < alpha < 0.5:
        raise ValueError(f"needs alpha in (0, 0.5), got {alpha}")
    seq = d_sequence(n - k - 1, alpha)
    return (
        alpha**k * seq[n - k - 1]
        + alpha ** (n - k) * seq[k - 1]
        - alpha ** (k + 1) * seq[n - k - 2]
        - alpha ** (n - k - 1) * seq[k]
    )
