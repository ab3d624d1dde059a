"""Command-line front end.

Four subcommands:

* ``scatter``  -- per-pair distance / resistance / Katz table for one graph
  at one or more decay values, suitable for scatter plots.
* ``cutoff``   -- table of ranking cut-off roots over a range of path sizes.
* ``converge`` -- one Katz entry against its infinite-size limit over a
  growing size list.
* ``verify``   -- run the numerical property suites and report per-property
  pass/fail lines.

All CSV output is deterministic: fixed 17-significant-digit scientific
notation for reals, plain decimal integers, '\\n' line endings, header row
always present, rows in a documented order.  Identical invocations produce
byte-identical files.

Exit codes: 0 success, 1 property/verification failure, 2 usage or
validation error (including inadmissible decay values).
"""

from __future__ import annotations

import argparse
import sys
import time

from . import katz, ordering
from .dpoly import INV_SQRT5
from .graphs import FAMILIES, GraphSpec, graph_distance, require_admissible, resistance
from .verify import run_suites

DEFAULT_SCATTER_ALPHAS = (0.2, 0.3, 0.46)
DEFAULT_CONVERGE_SIZES = (10, 20, 40, 80, 160, 320)


def _real(x: float) -> str:
    return f"{x:.16e}"


def _alpha_list(text: str) -> list[float]:
    values = [float(tok) for tok in text.split(",") if tok.strip()]
    if not values:
        raise ValueError("empty alpha list")
    return values


def _int_list(text: str) -> list[int]:
    values = [int(tok) for tok in text.split(",") if tok.strip()]
    if not values:
        raise ValueError("empty size list")
    return values


def _write_csv(path: str, header: list[str], rows: list[list[str]]) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(row) + "\n")


def cmd_scatter(args: argparse.Namespace) -> int:
    g = GraphSpec(args.family, args.n)
    alphas = sorted(args.alpha)
    for alpha in alphas:
        require_admissible(alpha, g)
    rows: list[list[str]] = []
    for alpha in alphas:
        kmat = katz.katz_path_matrix(g.n, alpha) if g.is_path else katz.katz_cycle_matrix(g.n, alpha)
        for pair in g.pairs():
            rows.append(
                [
                    _real(alpha),
                    str(pair.i),
                    str(pair.j),
                    str(graph_distance(g, pair.i, pair.j)),
                    _real(resistance(g, pair.i, pair.j)),
                    _real(float(kmat[pair.i - 1, pair.j - 1])),
                ]
            )
    _write_csv(args.out, ["alpha", "i", "j", "distance", "resistance", "katz"], rows)
    return 0


def cmd_cutoff(args: argparse.Namespace) -> int:
    if args.j < 1:
        raise ValueError(f"j must be >= 1, got {args.j}")
    if args.n_lo > args.n_hi:
        raise ValueError(f"empty size range: n_lo={args.n_lo} > n_hi={args.n_hi}")
    if args.n_lo - args.j < 5:
        raise ValueError(
            f"n - j must be >= 5 for a bracketed root; got n_lo={args.n_lo}, j={args.j}"
        )
    if not args.tol > 0.0:
        raise ValueError(f"tol must be positive, got {args.tol}")
    rows: list[list[str]] = []
    roots: list[float] = []
    converged = 0
    nan = float("nan")
    for n in range(args.n_lo, args.n_hi + 1):
        try:
            result = ordering.cutoff_root(n, args.j, tol=args.tol)
        except ordering.BracketError:
            rows.append([str(n), str(args.j), _real(nan), _real(nan), "0", _real(nan), "bracket_failure"])
            continue
        except ordering.BisectionDivergenceError:
            rows.append(
                [
                    str(n),
                    str(args.j),
                    _real(nan),
                    _real(nan),
                    str(ordering.BISECTION_ITERATION_CAP),
                    _real(nan),
                    "no_convergence",
                ]
            )
            continue
        converged += 1
        roots.append(result.root)
        rows.append(
            [
                str(n),
                str(args.j),
                _real(result.root),
                _real(result.root - INV_SQRT5),
                str(result.iterations),
                _real(result.residual),
                "ok",
            ]
        )
    _write_csv(
        args.out,
        ["n", "j", "root", "root_minus_inv_sqrt5", "iterations", "residual", "status"],
        rows,
    )
    monotone = all(a > b for a, b in zip(roots, roots[1:]))
    print(
        f"cutoff j={args.j} n={args.n_lo}..{args.n_hi}: {converged}/{len(rows)} converged; "
        f"roots monotone decreasing: {'yes' if monotone and roots else 'no'}"
    )
    return 0


def cmd_converge(args: argparse.Namespace) -> int:
    sizes = args.n_list
    if sorted(sizes) != sizes:
        raise ValueError("n-list must be increasing")
    if args.family == "path":
        if args.i is None or args.j is None or args.offset is not None:
            raise ValueError("path convergence takes --i and --j (not --offset)")
        if not 1 <= args.i <= args.j:
            raise ValueError(f"need 1 <= i <= j, got i={args.i}, j={args.j}")
        if args.j > min(sizes):
            raise ValueError(f"vertex {args.j} does not exist in the smallest size n={min(sizes)}")
    else:
        if args.offset is None or args.i is not None or args.j is not None:
            raise ValueError("cycle convergence takes --offset (not --i/--j)")
        if args.offset < 1:
            raise ValueError(f"offset must be >= 1, got {args.offset}")
        if 1 + args.offset > min(sizes):
            raise ValueError(f"offset {args.offset} does not fit in the smallest size n={min(sizes)}")
    for n in sizes:
        require_admissible(args.alpha, GraphSpec(args.family, n))
    if args.family == "path":
        limit = katz.katz_limit_path(args.i, args.j, args.alpha)
        exact = [katz.katz_path(n, args.i, args.j, args.alpha) for n in sizes]
    else:
        limit = katz.katz_limit_cycle(args.offset, args.alpha)
        exact = [katz.katz_cycle(n, 1, 1 + args.offset, args.alpha) for n in sizes]
    rows = [
        [str(n), _real(value), _real(limit), _real(abs(value - limit))]
        for n, value in zip(sizes, exact)
    ]
    rows.append(["inf", _real(limit), _real(limit), _real(0.0)])
    _write_csv(args.out, ["n", "katz_exact", "limit_value", "abs_gap"], rows)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    results = run_suites(args.level)
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  {r.name:<{width}}  checks={r.checks:>6d}  max_err={r.max_err:.3e}")
    elapsed = time.perf_counter() - started
    total = sum(r.checks for r in results)
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} suites passed, {total} checks, {elapsed:.1f}s")
    if failed:
        first = failed[0]
        print(f"first failure: {first.name}: {first.failures[0]}", file=sys.stderr)
        print(f"reproduce with: katzlab verify --level {args.level}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="katzlab",
        description="Katz similarity, effective resistance, and pair-ranking tables on paths and cycles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    scatter = sub.add_parser("scatter", help="per-pair metric table for scatter plots")
    scatter.add_argument("--family", choices=FAMILIES, required=True)
    scatter.add_argument("--n", type=int, required=True, help="number of vertices")
    scatter.add_argument(
        "--alpha",
        type=_alpha_list,
        default=list(DEFAULT_SCATTER_ALPHAS),
        help="comma-separated decay values (default 0.2,0.3,0.46)",
    )
    scatter.add_argument("--out", required=True, help="output CSV path")
    scatter.set_defaults(handler=cmd_scatter)

    cutoff = sub.add_parser("cutoff", help="ranking cut-off roots over a size range")
    cutoff.add_argument("--j", type=int, required=True, help="pair offset of the leading gap")
    cutoff.add_argument("--n-lo", type=int, required=True)
    cutoff.add_argument("--n-hi", type=int, required=True)
    cutoff.add_argument("--tol", type=float, default=1e-15, help="bisection bracket width")
    cutoff.add_argument("--out", required=True, help="output CSV path")
    cutoff.set_defaults(handler=cmd_cutoff)

    converge = sub.add_parser("converge", help="one Katz entry against its large-size limit")
    converge.add_argument("--family", choices=FAMILIES, required=True)
    converge.add_argument("--i", type=int, help="first vertex (path family)")
    converge.add_argument("--j", type=int, help="second vertex (path family)")
    converge.add_argument("--offset", type=int, help="arc offset from vertex 1 (cycle family)")
    converge.add_argument("--alpha", type=float, required=True)
    converge.add_argument(
        "--n-list",
        type=_int_list,
        default=list(DEFAULT_CONVERGE_SIZES),
        help="comma-separated sizes (default 10,20,40,80,160,320)",
    )
    converge.add_argument("--out", required=True, help="output CSV path")
    converge.set_defaults(handler=cmd_converge)

    verify = sub.add_parser("verify", help="run the numerical property suites")
    verify.add_argument("--level", choices=("quick", "full"), default="quick")
    verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
