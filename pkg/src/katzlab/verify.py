"""Numerical property suites behind `katzlab verify`.

Every identity, bound, and cross-check the package rests on, swept over
fixed deterministic grids and reported one line per property.  The `quick`
level covers n <= 30-ish in a few seconds; `full` widens the sweeps to the
sizes the acceptance tolerances are stated at (n <= 100 polynomial
identities, n <= 40 oracle comparisons).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import dpoly, katz, ordering
from .dpoly import INV_SQRT5
from .graphs import (
    GraphSpec,
    graph_distance,
    resistance,
    resistance_oracle,
    spectral_radius,
    spectral_radius_oracle,
)

DPOLY_GRID = [k / 100 for k in range(1, 50)]
DPOLY_PROBED = DPOLY_GRID + [INV_SQRT5, 0.499]


def katz_grid(g: GraphSpec) -> list[float]:
    """The admissible part of the 0.02-step decay grid for one graph."""
    bound = 1.0 / spectral_radius(g)
    return [k / 50 for k in range(1, 50) if k / 50 < bound]


def mixed_err(a: float, b: float) -> float:
    """|a - b| relative to max(1, |a|, |b|): relative above 1, absolute below."""
    return abs(a - b) / max(1.0, abs(a), abs(b))


def rel_err(a: float, b: float) -> float:
    return abs(a - b) / max(abs(a), abs(b))


@dataclass
class SuiteResult:
    name: str
    tolerance: float
    checks: int = 0
    max_err: float = 0.0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, err: float, context: str) -> None:
        self.checks += 1
        if err > self.max_err:
            self.max_err = err
        if err > self.tolerance:
            self.failures.append(f"{context}: err={err:.3e}")

    def check(self, ok: bool, context: str) -> None:
        """Boolean check; failed checks count as err = 1."""
        self.checks += 1
        if not ok:
            self.max_err = max(self.max_err, 1.0)
            self.failures.append(context)


def suite_d_recursion_vs_closed(level: str) -> SuiteResult:
    res = SuiteResult("d recursion matches exact closed sum", 1e-12)
    n_max = 100 if level == "full" else 30
    for alpha in DPOLY_PROBED:
        for n in range(n_max + 1):
            err = mixed_err(dpoly.d_closed(n, alpha), dpoly.d_recursive(n, alpha))
            res.record(err, f"n={n} alpha={alpha}")
    return res


def suite_d_splitting(level: str) -> SuiteResult:
    res = SuiteResult("d splitting identity", 1e-12)
    n_max = 60 if level == "full" else 30
    for alpha in DPOLY_PROBED:
        a2 = alpha * alpha
        seq = dpoly.d_sequence(n_max, alpha)
        for n in range(2, n_max + 1):
            for k in range(1, n):
                rhs = seq[k] * seq[n - k] - a2 * seq[k - 1] * seq[n - k - 1]
                res.record(mixed_err(seq[n], rhs), f"n={n} k={k} alpha={alpha}")
    return res


def suite_d_product(level: str) -> SuiteResult:
    res = SuiteResult("d product identity", 1e-12)
    n_max = 60 if level == "full" else 30
    for alpha in DPOLY_PROBED:
        seq = dpoly.d_sequence(n_max + 1, alpha)
        for n in range(1, n_max + 1):
            for k in range(1, n + 1):
                lhs = seq[k] * seq[n] - seq[k - 1] * seq[n + 1]
                rhs = alpha ** (2 * k) * seq[n - k]
                res.record(mixed_err(lhs, rhs), f"n={n} k={k} alpha={alpha}")
    return res


def suite_d_bounds(level: str) -> SuiteResult:
    res = SuiteResult("d monotone bounds", 0.0)
    n_max = 100
    for alpha in DPOLY_PROBED:
        seq = dpoly.d_sequence(n_max, alpha)
        # strict decrease starts at n = 2 (d_0 = d_1 = 1 by definition)
        for n in range(2, n_max + 1):
            ok = seq[n - 1] > seq[n] > 0.5 * seq[n - 1] > 0.0
            res.check(ok, f"n={n} alpha={alpha}: d_prev={seq[n - 1]!r} d={seq[n]!r}")
    return res


def suite_d_special_values(level: str) -> SuiteResult:
    res = SuiteResult("d special values at the probe points", 1e-12)
    n_max = 200 if level == "full" else 60
    half = dpoly.d_sequence(n_max, 0.5)
    root5 = dpoly.d_sequence(n_max, INV_SQRT5)
    for n in range(n_max + 1):
        res.record(rel_err(dpoly.d_special_half(n), half[n]), f"half n={n}")
        res.record(rel_err(dpoly.d_special_root5(n), root5[n]), f"root5 n={n}")
    for n in range(2, n_max + 1):
        err = abs(dpoly.fib_ratio(n - 1) * (1.0 - dpoly.fib_ratio(n)) - 0.2)
        res.record(err, f"fib identity n={n}")
    return res


def suite_d_ratio_limit(level: str) -> SuiteResult:
    res = SuiteResult("d ratio limit constant", 1e-8)
    n = 400
    for alpha in (0.1, 0.3, 0.45):
        seq = dpoly.d_sequence(n + 3, alpha)
        for k in (1, 2, 3):
            err = abs(seq[n + k] / seq[n] - dpoly.ratio_constant(k, alpha))
            res.record(err, f"k={k} alpha={alpha}")
    return res


def suite_d_vanishing_ratio(level: str) -> SuiteResult:
    res = SuiteResult("d vanishing power ratio bound", 0.0)
    n_max = 200
    for alpha in DPOLY_PROBED:
        seq = dpoly.d_sequence(n_max, alpha)
        power = 1.0
        for n in range(1, n_max + 1):
            power *= alpha
            bound = 2.0 * alpha / (n + 1)
            res.check(power / seq[n] <= bound * (1.0 + 1e-13), f"n={n} alpha={alpha}")
    return res


def suite_d_golden_lower_bound(level: str) -> SuiteResult:
    res = SuiteResult("d golden-ratio lower bound", 0.0)
    grid = [a for a in DPOLY_GRID if a < INV_SQRT5]
    for alpha in grid:
        seq = dpoly.d_sequence(100, alpha)
        for n in range(1, 101):
            ok = seq[n] >= dpoly.fib_ratio(n) * seq[n - 1] - 1e-15
            res.check(ok, f"n={n} alpha={alpha}")
    return res


def suite_path_determinant(level: str) -> SuiteResult:
    res = SuiteResult("path determinant identity", 1e-11)
    n_max = 40 if level == "full" else 20
    for n in range(2, n_max + 1):
        for alpha in katz_grid(GraphSpec.path(n)):
            err = rel_err(katz.determinant_path(n, alpha), dpoly.d_recursive(n, alpha))
            res.record(err, f"n={n} alpha={alpha}")
    return res


def suite_cycle_determinant(level: str) -> SuiteResult:
    res = SuiteResult("cycle determinant identity", 1e-11)
    n_max = 40 if level == "full" else 20
    for n in range(3, n_max + 1):
        for alpha in katz_grid(GraphSpec.cycle(n)):
            err = rel_err(katz.determinant_cycle(n, alpha), dpoly.D_cycle_denominator(n, alpha))
            res.record(err, f"n={n} alpha={alpha}")
    return res


def suite_cycle_parity_factorization(level: str) -> SuiteResult:
    res = SuiteResult("cycle determinant parity factorization", 1e-12)
    n_max = 100 if level == "full" else 40
    for n in range(3, n_max + 1):
        for alpha in DPOLY_GRID:
            err = rel_err(dpoly.D_parity_form(n, alpha), dpoly.D_cycle_denominator(n, alpha))
            res.record(err, f"n={n} alpha={alpha}")
    return res


def suite_spectral_radius(level: str) -> SuiteResult:
    res = SuiteResult("spectral radius closed form vs power iteration", 1e-10)
    for n in (2, 3, 5, 10, 17, 40):
        if n >= 2:
            g = GraphSpec.path(n)
            res.record(abs(spectral_radius(g) - spectral_radius_oracle(g)), f"path n={n}")
        if n >= 3:
            g = GraphSpec.cycle(n)
            res.record(abs(spectral_radius(g) - spectral_radius_oracle(g)), f"cycle n={n}")
    return res


def suite_resistance_oracle(level: str) -> SuiteResult:
    res = SuiteResult("resistance closed form vs pseudoinverse oracle", 1e-10)
    n_max = 40 if level == "full" else 20
    for family in ("path", "cycle"):
        start = 2 if family == "path" else 3
        for n in range(start, n_max + 1):
            g = GraphSpec(family, n)
            for p in g.pairs():
                err = abs(resistance(g, p.i, p.j) - resistance_oracle(g, p.i, p.j))
                res.record(err, f"{family} n={n} pair=({p.i},{p.j})")
    return res


def suite_metric_axioms(level: str) -> SuiteResult:
    res = SuiteResult("metric symmetry and triangle inequality", 0.0)
    for family in ("path", "cycle"):
        start = 2 if family == "path" else 3
        for n in range(start, 21):
            g = GraphSpec(family, n)
            dist = {(i, j): graph_distance(g, i, j) for i in range(1, n + 1) for j in range(1, n + 1)}
            resist = {(i, j): resistance(g, i, j) for i in range(1, n + 1) for j in range(1, n + 1)}
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    res.check(dist[(i, j)] == dist[(j, i)], f"{family} n={n} distance symmetry ({i},{j})")
                    res.check(resist[(i, j)] == resist[(j, i)], f"{family} n={n} resistance symmetry ({i},{j})")
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    for via in range(1, n + 1):
                        ok_d = dist[(i, j)] <= dist[(i, via)] + dist[(via, j)]
                        ok_r = resist[(i, j)] <= resist[(i, via)] + resist[(via, j)] + 1e-12
                        res.check(ok_d and ok_r, f"{family} n={n} triangle ({i},{via},{j})")
    return res


def suite_katz_closed_vs_inverse(level: str) -> SuiteResult:
    res = SuiteResult("katz closed form vs inverse oracle", 1e-10)
    n_max = 40 if level == "full" else 25
    off_mask_cache: dict[int, np.ndarray] = {}
    for family in ("path", "cycle"):
        for n in range(5, n_max + 1):
            g = GraphSpec(family, n)
            mask = off_mask_cache.setdefault(n, ~np.eye(n, dtype=bool))
            for alpha in katz_grid(g):
                closed = (
                    katz.katz_path_matrix(n, alpha) if g.is_path else katz.katz_cycle_matrix(n, alpha)
                )
                oracle = katz.katz_oracle_inverse(g, alpha)
                err = float(
                    (np.abs(closed - oracle)[mask] / np.abs(oracle)[mask]).max()
                )
                res.record(err, f"{family} n={n} alpha={alpha}")
    return res


def suite_series_vs_inverse(level: str) -> SuiteResult:
    res = SuiteResult("katz series oracle vs inverse oracle", 1e-11)
    if level == "full":
        sizes = range(5, 41)
        grids = katz_grid
    else:
        sizes = (5, 12, 25)
        grids = lambda g: [a for a in (0.1, 0.3, 0.46) if a < 1.0 / spectral_radius(g)]
    for family in ("path", "cycle"):
        for n in sizes:
            g = GraphSpec(family, n)
            for alpha in grids(g):
                series = katz.katz_oracle_series(g, alpha, tol=1e-12)
                inverse = katz.katz_oracle_inverse(g, alpha)
                res.record(float(np.abs(series - inverse).max()), f"{family} n={n} alpha={alpha}")
    return res


def suite_katz_distance_monotone(level: str) -> SuiteResult:
    res = SuiteResult("katz decreasing in path distance from an endpoint", 0.0)
    for n in range(3, 31):
        for alpha in [a for a in DPOLY_PROBED if a < 0.5]:
            row = katz.katz_path_matrix(n, alpha)[0]
            ok = all(row[k] > row[k + 1] for k in range(1, n - 1))
            res.check(ok, f"n={n} alpha={alpha}")
    return res


def suite_katz_shift_monotone(level: str) -> SuiteResult:
    res = SuiteResult("katz non-decreasing under centered pair shifts", 0.0)
    for n in range(3, 31):
        for alpha in [a for a in DPOLY_PROBED if a < 0.5]:
            m = katz.katz_path_matrix(n, alpha)
            for k in range(1, n - 1):
                for i in range(1, n - k):
                    if n - k - 2 * i - 1 < 0:
                        continue
                    left = m[i - 1, i + k - 1]
                    right = m[i, i + k]
                    res.check(left <= right + 1e-13, f"n={n} k={k} i={i} alpha={alpha}")
    return res


def suite_cycle_translation_invariance(level: str) -> SuiteResult:
    res = SuiteResult("cycle katz depends only on arc length", 1e-13)
    for n in range(5, 31):
        for alpha in (0.1, 0.3, 0.46):
            m = katz.katz_cycle_matrix(n, alpha)
            idx = np.arange(1, n + 1)
            span = np.abs(np.subtract.outer(idx, idx))
            arcs = np.minimum(span, n - span)
            for k in range(1, n // 2 + 1):
                vals = m[arcs == k]
                res.record(float(vals.max() - vals.min()) / max(1.0, float(np.abs(vals).max())), f"n={n} k={k} alpha={alpha}")
    return res


def suite_cycle_agreement(level: str) -> SuiteResult:
    res = SuiteResult("cycle pair-ranking agreement across all metrics", 0.0)
    n_max = 30 if level == "full" else 20
    for n in range(5, n_max + 1):
        g = GraphSpec.cycle(n)
        for alpha in katz_grid(g):
            report = ordering.agreement(g, alpha)
            res.check(report.all_agree(), f"n={n} alpha={alpha}: witness={report.witness}")
            res.check(
                ordering.class_structures_match(g, alpha), f"n={n} alpha={alpha}: tie classes differ"
            )
    return res


def suite_path_agreement_below_cutoff(level: str) -> SuiteResult:
    res = SuiteResult("path ranking agreement below the golden bound", 0.0)
    for n in range(3, 31):
        g = GraphSpec.path(n)
        for alpha in [a for a in katz_grid(g) if a < INV_SQRT5]:
            report = ordering.agreement(g, alpha)
            res.check(
                report.katz_vs_resistance and report.katz_vs_distance and report.resistance_vs_distance,
                f"n={n} alpha={alpha}: witness={report.witness}",
            )
    return res


def suite_path_inversion_witness(level: str) -> SuiteResult:
    res = SuiteResult("path ranking inversion at alpha = 0.46", 0.0)
    report = ordering.agreement(GraphSpec.path(10), 0.46)
    res.check(not report.katz_vs_resistance, "katz vs resistance unexpectedly agreed on P_10 at 0.46")
    res.check(report.witness is not None, "no witness produced")
    if report.witness is not None:
        g = GraphSpec.path(10)
        da = graph_distance(g, report.witness.pair_a.i, report.witness.pair_a.j)
        db = graph_distance(g, report.witness.pair_b.i, report.witness.pair_b.j)
        res.check(abs(da - db) == 1, f"witness distances {da} and {db} do not differ by 1")
    return res


def suite_gap_sign_equivalence(level: str) -> SuiteResult:
    res = SuiteResult("gap polynomial sign equivalence", 0.0)
    for n in range(3, 31):
        for j in (1, 2, 3):
            if n - j < 2:
                continue
            for alpha in DPOLY_PROBED:
                gap = ordering.p_gap(n, j, alpha)
                tilde = ordering.p_tilde(n, j, alpha)
                ok = gap * tilde > 0.0 or (abs(gap) < 1e-12 and abs(tilde) < 1e-12)
                res.check(ok, f"n={n} j={j} alpha={alpha}: p_gap={gap:.3e} p_tilde={tilde:.3e}")
    return res


def suite_gap_probe_endpoints(level: str) -> SuiteResult:
    """Signs of p_tilde at the bracket probes.

    The root sits delta(span) above 1/sqrt 5 with delta shrinking
    geometrically in span = n - j; exact rational evaluation puts the
    first delta below 1e-9 at span 40, so the 1e-9-shifted probe reads
    positive through span 39 and negative from span 40 on.
    """
    res = SuiteResult("gap polynomial values at the probe points", 0.0)
    for j in (1, 2, 3):
        for span in range(5, 51):
            n = span + j
            left = ordering.p_tilde(n, j, INV_SQRT5 + 1e-9)
            if span <= 39:
                res.check(left > 0.0, f"left probe n={n} j={j} expected positive")
            else:
                res.check(left < 0.0, f"left probe n={n} j={j} expected past the root")
            res.check(ordering.p_tilde(n, j, 0.5) < 0.0, f"right probe n={n} j={j}")
        res.check(abs(ordering.p_tilde(4 + j, j, 0.5)) <= 1e-14, f"zero at span 4, j={j}")
        values = [ordering.p_tilde(span + j, j, INV_SQRT5) for span in range(2, 51)]
        res.check(all(v > 0.0 for v in values), f"j={j}: probe value not positive")
        for prev, nxt in zip(values, values[2:]):
            res.check(nxt < prev, f"j={j}: probe values not decreasing toward 0")
    return res


def suite_cycle_numerator_gap(level: str) -> SuiteResult:
    """Arc-class margins: positive, decreasing in k, half-arc closed form.

    The half-arc factor is (1 - 2 alpha): expanding the four-term margin
    with the recursion d_l = d_{l-1} - alpha^2 d_{l-2} collapses it to
    alpha^(l-1) (1 - 2 alpha) d_{l-1}, confirmed in exact rationals.
    """
    res = SuiteResult("cycle arc-class separation margin", 1e-12)
    n_max = 40 if level == "full" else 20
    grid = [a for a in DPOLY_GRID if a < 0.5]
    for n in range(5, n_max + 1):
        for alpha in grid:
            gaps = [ordering.cycle_numerator_gap(n, k, alpha) for k in range(1, n // 2)]
            res.check(all(gap > 0.0 for gap in gaps), f"n={n} alpha={alpha}: non-positive margin")
            res.check(
                all(a >= b - 1e-15 for a, b in zip(gaps, gaps[1:])),
                f"n={n} alpha={alpha}: margins not decreasing in k",
            )
            if n % 2 == 0:
                ell = n // 2
                closed = alpha ** (ell - 1) * dpoly.d_recursive(ell - 1, alpha) * (1.0 - 2.0 * alpha)
                res.record(mixed_err(gaps[-1], closed), f"n={n} alpha={alpha}: half-arc margin form")
    return res


def suite_cutoff_roots(level: str) -> SuiteResult:
    """Every root found, inside the bracket, strictly decreasing in n.

    Needs the default tol = 1e-15: adjacent roots at the large-n tail
    differ by a few 1e-13, so a coarser bisection would report spurious
    ties.
    """
    res = SuiteResult("cut-off roots: bracket, monotonicity", 0.0)
    n_hi = 61 if level == "full" else 36
    roots = []
    for n in range(6, n_hi + 1):
        try:
            result = ordering.cutoff_root(n, 1)
        except (ordering.BracketError, ordering.BisectionDivergenceError) as exc:
            res.check(False, f"n={n}: {exc}")
            continue
        res.check(INV_SQRT5 < result.root < 0.5, f"n={n}: root {result.root} outside bracket")
        res.check(result.residual <= 1e-10, f"n={n}: residual {result.residual:.3e}")
        roots.append(result.root)
    res.check(
        all(a > b for a, b in zip(roots, roots[1:])),
        "root sequence is not strictly decreasing",
    )
    return res


def suite_limit_convergence(level: str) -> SuiteResult:
    """Entries approach their limits, and gaps shrink strictly.

    The gap ordering is checked in exact rational arithmetic: paths climb
    to the limit strictly from below and cycles descend strictly from
    above, which is the same statement as |entry - limit| strictly
    decreasing but stays decidable after the float gaps saturate at
    machine epsilon (already by n = 40 at these alphas).
    """
    res = SuiteResult("katz entries converge to their limits", 1e-8)
    n_list = (10, 20, 40, 80, 160, 320)
    for alpha in (0.1, 0.3, 0.45):
        for i, j in ((1, 2), (2, 5), (3, 3)):
            limit = katz.katz_limit_path(i, j, alpha)
            res.record(abs(katz.katz_path(320, i, j, alpha) - limit), f"path ({i},{j}) alpha={alpha}")
            exact = [katz.katz_path_exact(n, i, j, alpha) for n in n_list]
            res.check(
                all(a < b for a, b in zip(exact, exact[1:])),
                f"path ({i},{j}) alpha={alpha}: entries not strictly climbing to the limit",
            )
        for offset in (1, 2, 3):
            limit = katz.katz_limit_cycle(offset, alpha)
            res.record(
                abs(katz.katz_cycle(320, 1, 1 + offset, alpha) - limit),
                f"cycle offset {offset} alpha={alpha}",
            )
            exact = [katz.katz_cycle_exact(n, 1, 1 + offset, alpha) for n in n_list]
            res.check(
                all(a > b for a, b in zip(exact, exact[1:])),
                f"cycle offset {offset} alpha={alpha}: entries not strictly descending to the limit",
            )
    return res


ALL_SUITES = (
    suite_d_recursion_vs_closed,
    suite_d_splitting,
    suite_d_product,
    suite_d_bounds,
    suite_d_special_values,
    suite_d_ratio_limit,
    suite_d_vanishing_ratio,
    suite_d_golden_lower_bound,
    suite_path_determinant,
    suite_cycle_determinant,
    suite_cycle_parity_factorization,
    suite_spectral_radius,
    suite_resistance_oracle,
    suite_metric_axioms,
    suite_katz_closed_vs_inverse,
    suite_series_vs_inverse,
    suite_katz_distance_monotone,
    suite_katz_shift_monotone,
    suite_cycle_translation_invariance,
    suite_cycle_agreement,
    suite_path_agreement_below_cutoff,
    suite_path_inversion_witness,
    suite_gap_sign_equivalence,
    suite_gap_probe_endpoints,
    suite_cycle_numerator_gap,
    suite_cutoff_roots,
    suite_limit_convergence,
)


def run_suites(level: str = "quick") -> list[SuiteResult]:
    if level not in ("quick", "full"):
        raise ValueError(f"level must be 'quick' or 'full', got {level!r}")
    return [suite(level) for suite in ALL_SUITES]
