"""The polynomial kernel shared by every closed form in this package.

``d_n(alpha)`` is ``det(I - alpha * A)`` for the n-vertex path graph.  The
family satisfies ``d_n = d_{n-1} - alpha^2 d_{n-2}`` with ``d_0 = d_1 = 1``,
stays in ``(0, 1]`` for ``alpha`` in ``(0, 1/2)``, and carries golden-ratio
structure at the two probe points ``alpha = 1/2`` and ``alpha = 1/sqrt(5)``
that the ordering module leans on.  The cycle-graph determinant ``D_n`` and
its parity factorization live here too.

All evaluators return IEEE doubles.  ``d_recursive`` is the canonical route
used by the rest of the package; ``d_closed`` is an independent cross-check
of it (see its docstring for why it is accumulated exactly).
"""

from __future__ import annotations

import math
from fractions import Fraction

SQRT5 = math.sqrt(5.0)
INV_SQRT5 = 1.0 / SQRT5

# Golden ratio (1 + sqrt 5)/2 and its reciprocal (sqrt 5 - 1)/2; the two
# satisfy GOLDEN = 1 + GOLDEN_RECIP = 1/GOLDEN_RECIP.
GOLDEN = (SQRT5 + 1.0) / 2.0
GOLDEN_RECIP = (SQRT5 - 1.0) / 2.0


def _require_index(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"index must be an integer, got {n!r}")
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")


def d_recursive(n: int, alpha: float) -> float:
    """d_n(alpha) by the two-term recursion. O(n) time, O(1) memory.

    Numerically benign on (0, 1/2): every intermediate stays in (0, 1] and
    both characteristic roots lie inside the unit disc, so rounding errors
    decay instead of amplifying.
    """
    _require_index(n)
    if n < 2:
        return 1.0
    a2 = alpha * alpha
    prev, cur = 1.0, 1.0
    for _ in range(n - 1):
        prev, cur = cur, cur - a2 * prev
    return cur


def d_sequence(n: int, alpha: float) -> list[float]:
    """[d_0, d_1, ..., d_n] via the same recursion as :func:`d_recursive`."""
    _require_index(n)
    seq = [1.0] * (n + 1)
    a2 = alpha * alpha
    for k in range(2, n + 1):
        seq[k] = seq[k - 1] - a2 * seq[k - 2]
    return seq


def d_sequence_exact(n: int, alpha) -> list[Fraction]:
    """[d_0, ..., d_n] in exact rational arithmetic.

    alpha may be anything Fraction accepts (a float is used at its exact
    binary value).  Backs the convergence-order checks, where consecutive
    gaps shrink below double resolution.
    """
    _require_index(n)
    a2 = Fraction(alpha) ** 2
    seq = [Fraction(1)] * (n + 1)
    for k in range(2, n + 1):
        seq[k] = seq[k - 1] - a2 * seq[k - 2]
    return seq


def d_closed(n: int, alpha: float) -> float:
    """d_n(alpha) as the alternating sum over m of (-1)^m C(n-m, m) alpha^(2m).

    Terms are summed in ascending m.  The sum is hostile to floating point
    for large n: at n = 100, alpha = 0.49 the largest term is ~1e7 while the
    value is ~1e-22, so a double-precision accumulation loses the value
    entirely.  Since any machine double is an exact binary rational p/q,
    the sum is instead accumulated in exact integer arithmetic over
    alpha^2 = p^2/q^2 and rounded once at the end.  That keeps this
    evaluator a full-accuracy independent cross-check of d_recursive at
    every n the test sweeps use.
    """
    _require_index(n)
    p, q = float(alpha).as_integer_ratio()
    p2, q2 = p * p, q * q
    half = n // 2
    total = 0
    ppow = 1  # p2**m
    qpow = q2**half  # q2**(half - m)
    for m in range(half + 1):
        term = math.comb(n - m, m) * ppow * qpow
        total = total - term if m % 2 else total + term
        if m < half:
            ppow *= p2
            qpow //= q2
    return float(Fraction(total, q2**half))


def d_special_half(n: int) -> float:
    """d_n(1/2) = (n + 1) / 2^n, computed exactly as a dyadic rational."""
    _require_index(n)
    return math.ldexp(n + 1, -n)


def d_special_root5(n: int) -> float:
    """d_n(1/sqrt 5) = (GOLDEN^(n+1) - GOLDEN_RECIP^(n+1)) / sqrt(5)^n.

    Written with the powers pre-divided by sqrt(5)^n so the expression never
    overflows, whatever n is.
    """
    _require_index(n)
    hi = GOLDEN * (GOLDEN / SQRT5) ** n
    lo = GOLDEN_RECIP * (GOLDEN_RECIP / SQRT5) ** n
    return hi - lo


def D_cycle_denominator(n: int, alpha: float) -> float:
    """det(I - alpha * A) for the n-cycle: d_{n-1} - 2 alpha^n - 2 alpha^2 d_{n-2}.

    Defined for n >= 3.  For n in {3, 4} the expression is validated against
    the dense determinant oracle only; the closed-form Katz route never needs
    it there.
    """
    _require_index(n)
    if n < 3:
        raise ValueError(f"cycle determinant needs n >= 3, got {n}")
    seq = d_sequence(n - 1, alpha)
    return seq[n - 1] - 2.0 * alpha**n - 2.0 * alpha * alpha * seq[n - 2]


def D_parity_form(n: int, alpha: float) -> float:
    """Parity-factored form of :func:`D_cycle_denominator`.

    Even n = 2L:  (1 - 4 alpha^2) d_{L-1}^2.
    Odd  n = 2L+1: (1 - 2 alpha) (alpha^(2L) + (1 + 2 alpha) d_L d_{L-1}).
    """
    _require_index(n)
    if n < 3:
        raise ValueError(f"parity form needs n >= 3, got {n}")
    if n % 2 == 0:
        ell = n // 2
        d = d_recursive(ell - 1, alpha)
        return (1.0 - 4.0 * alpha * alpha) * d * d
    ell = (n - 1) // 2
    seq = d_sequence(ell, alpha)
    return (1.0 - 2.0 * alpha) * (alpha ** (2 * ell) + (1.0 + 2.0 * alpha) * seq[ell] * seq[ell - 1])


def fib_ratio(n: int) -> float:
    """(GOLDEN^(n+1) - GOLDEN_RECIP^(n+1)) / (sqrt(5) (GOLDEN^n - GOLDEN_RECIP^n)).

    The golden-ratio analogue of consecutive-Fibonacci ratios; it lower-bounds
    d_n/d_{n-1} for alpha below 1/sqrt(5), and consecutive values satisfy
    fib_ratio(n-1) * (1 - fib_ratio(n)) = 1/5.
    """
    _require_index(n)
    if n < 1:
        raise ValueError("fib_ratio needs n >= 1; the n = 0 denominator vanishes")
    num = GOLDEN ** (n + 1) - GOLDEN_RECIP ** (n + 1)
    den = SQRT5 * (GOLDEN**n - GOLDEN_RECIP**n)
    return num / den


def ratio_constant(k: int, alpha: float) -> float:
    """((1 + sqrt(1 - 4 alpha^2)) / 2)^k, the limit of d_{n+k}/d_n as n grows.

    Negative k is allowed; the limit formulas for Katz entries use it as the
    growth factor 2/(1 + sqrt(1 - 4 alpha^2)).
    """
    if not isinstance(k, int) or isinstance(k, bool):
        raise TypeError(f"shift must be an integer, got {k!r}")
    if not 0.0 < alpha < 0.5:
        raise ValueError(f"ratio_constant needs alpha in (0, 0.5), got {alpha}")
    return ((1.0 + math.sqrt(1.0 - 4.0 * alpha * alpha)) / 2.0) ** k
