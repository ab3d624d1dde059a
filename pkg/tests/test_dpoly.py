import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from katzlab import dpoly

ALPHAS = [0.02, 0.1, 0.25, 0.3, 1.0 / math.sqrt(5.0), 0.45, 0.49]

# interior decay values; max_value stays below 1/2 where the bounds hold
decay = st.floats(min_value=1e-3, max_value=0.499)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_base_cases(alpha):
    assert dpoly.d_recursive(0, alpha) == 1.0
    assert dpoly.d_recursive(1, alpha) == 1.0


def test_hand_table_at_half():
    # d_n = d_{n-1} - 0.25 d_{n-2}, worked by hand
    expected = [1.0, 1.0, 0.75, 0.5, 0.3125, 0.1875]
    assert [dpoly.d_recursive(n, 0.5) for n in range(6)] == expected


def test_sequence_matches_scalar():
    seq = dpoly.d_sequence(30, 0.37)
    assert len(seq) == 31
    assert seq == [dpoly.d_recursive(n, 0.37) for n in range(31)]


def test_sequence_exact_types_and_values():
    seq = dpoly.d_sequence_exact(20, Fraction(1, 2))
    assert all(isinstance(v, Fraction) for v in seq)
    # at alpha = 1/2 the family collapses to (n + 1) / 2^n
    assert all(seq[n] == Fraction(n + 1, 2**n) for n in range(21))


def test_sequence_exact_accepts_floats():
    seq = dpoly.d_sequence_exact(40, 0.3)
    # the float recursion at 0.3 should track the exact rationals closely
    assert all(abs(float(seq[n]) - dpoly.d_recursive(n, 0.3)) < 1e-14 for n in range(41))


@given(st.integers(min_value=0, max_value=80), decay)
def test_closed_sum_matches_recursion(n, alpha):
    a = dpoly.d_closed(n, alpha)
    b = dpoly.d_recursive(n, alpha)
    assert abs(a - b) <= 1e-12 * max(abs(a), abs(b), 1.0)


def test_closed_sum_survives_cancellation():
    # at n = 100, alpha = 0.49 the alternating terms reach ~1e7 while the
    # value is ~1e-22; only the exact accumulation keeps any digits
    a = dpoly.d_closed(100, 0.49)
    b = dpoly.d_recursive(100, 0.49)
    assert a > 0.0
    assert abs(a - b) <= 1e-12 * abs(a)


@given(st.integers(min_value=2, max_value=60), st.integers(min_value=0, max_value=10**6), decay)
def test_splitting_identity(n, k_seed, alpha):
    k = 1 + k_seed % (n - 1)
    seq = dpoly.d_sequence(n, alpha)
    rhs = seq[k] * seq[n - k] - alpha * alpha * seq[k - 1] * seq[n - k - 1]
    # absolute tolerance below magnitude 1: the subtraction cancels, and all
    # d values live in (0, 1]
    assert abs(seq[n] - rhs) <= 1e-12 * max(abs(seq[n]), abs(rhs), 1.0)


@given(st.integers(min_value=1, max_value=60), st.integers(min_value=0, max_value=10**6), decay)
def test_product_identity(n, k_seed, alpha):
    k = 1 + k_seed % n
    seq = dpoly.d_sequence(n + 1, alpha)
    lhs = seq[k] * seq[n] - seq[k - 1] * seq[n + 1]
    rhs = alpha ** (2 * k) * seq[n - k]
    assert abs(lhs - rhs) <= 1e-12 * max(abs(lhs), abs(rhs), 1.0)


@given(st.integers(min_value=2, max_value=100), decay)
def test_strict_decrease_bounds(n, alpha):
    seq = dpoly.d_sequence(n, alpha)
    assert seq[n - 1] > seq[n] > 0.5 * seq[n - 1] > 0.0


def test_special_half_is_exact():
    for n in range(61):
        assert dpoly.d_special_half(n) == math.ldexp(n + 1, -n)
        # both routes are dyadic-exact in doubles, so they agree bitwise
        assert dpoly.d_recursive(n, 0.5) == dpoly.d_special_half(n)


def test_special_root5_matches_recursion():
    for n in range(101):
        a = dpoly.d_special_root5(n)
        b = dpoly.d_recursive(n, dpoly.INV_SQRT5)
        assert abs(a - b) <= 1e-12 * max(abs(a), abs(b))


def test_special_root5_never_overflows():
    # the pre-divided powers keep intermediates bounded at any index
    value = dpoly.d_special_root5(100000)
    assert math.isfinite(value) and value >= 0.0


@pytest.mark.parametrize("n, expected", [(1, 1.0), (2, 0.8)])
def test_fib_ratio_small_values(n, expected):
    assert dpoly.fib_ratio(n) == pytest.approx(expected, rel=1e-14)


def test_fib_ratio_identity_and_limit():
    for n in range(2, 80):
        assert dpoly.fib_ratio(n - 1) * (1.0 - dpoly.fib_ratio(n)) == pytest.approx(0.2, abs=1e-14)
    # ratios settle on the golden ratio over sqrt 5
    assert dpoly.fib_ratio(200) == pytest.approx(dpoly.GOLDEN / dpoly.SQRT5, rel=1e-14)


def test_golden_lower_bound_below_probe():
    for alpha in (0.05, 0.2, 0.4, 0.44):
        seq = dpoly.d_sequence(100, alpha)
        for n in range(1, 101):
            assert seq[n] >= dpoly.fib_ratio(n) * seq[n - 1] - 1e-15


@pytest.mark.parametrize("alpha", [0.1, 0.3, 0.45])
def test_ratio_constant_is_the_tail_ratio(alpha):
    seq = dpoly.d_sequence(403, alpha)
    for k in (1, 2, 3):
        assert seq[400 + k] / seq[400] == pytest.approx(dpoly.ratio_constant(k, alpha), abs=1e-8)


@given(st.integers(min_value=-6, max_value=6), decay)
def test_ratio_constant_inverse_pairing(k, alpha):
    prod = dpoly.ratio_constant(k, alpha) * dpoly.ratio_constant(-k, alpha)
    assert prod == pytest.approx(1.0, rel=1e-14)


def test_vanishing_power_ratio_bound():
    for alpha in ALPHAS:
        seq = dpoly.d_sequence(200, alpha)
        power = 1.0
        for n in range(1, 201):
            power *= alpha
            assert power / seq[n] <= 2.0 * alpha / (n + 1) * (1.0 + 1e-13)


def test_cycle_denominator_worked_values():
    # D_3(0.2) = d_2 - 2(0.2)^3 - 2(0.2)^2 d_1 = 0.96 - 0.016 - 0.08
    assert dpoly.D_cycle_denominator(3, 0.2) == pytest.approx(0.864, abs=1e-15)
    assert dpoly.D_cycle_denominator(5, 0.2) == pytest.approx(0.80736, abs=1e-15)


@given(st.integers(min_value=3, max_value=100), decay)
def test_parity_factorization(n, alpha):
    a = dpoly.D_parity_form(n, alpha)
    b = dpoly.D_cycle_denominator(n, alpha)
    assert abs(a - b) <= 1e-12 * max(abs(a), abs(b), 1e-30)


def test_index_validation():
    with pytest.raises(ValueError):
        dpoly.d_recursive(-1, 0.3)
    with pytest.raises(TypeError):
        dpoly.d_recursive(2.0, 0.3)
    with pytest.raises(TypeError):
        dpoly.d_recursive(True, 0.3)
    with pytest.raises(ValueError):
        dpoly.D_cycle_denominator(2, 0.3)
    with pytest.raises(ValueError):
        dpoly.D_parity_form(2, 0.3)
    with pytest.raises(ValueError):
        dpoly.fib_ratio(0)


def test_ratio_constant_validation():
    with pytest.raises(ValueError):
        dpoly.ratio_constant(1, 0.5)
    with pytest.raises(ValueError):
        dpoly.ratio_constant(1, 0.0)
    with pytest.raises(TypeError):
        dpoly.ratio_constant(1.5, 0.3)


def test_golden_constants():
    assert dpoly.GOLDEN == pytest.approx(1.0 + dpoly.GOLDEN_RECIP, abs=1e-15)
    assert dpoly.GOLDEN * dpoly.GOLDEN_RECIP == pytest.approx(1.0, abs=1e-15)
    assert dpoly.SQRT5 * dpoly.INV_SQRT5 == pytest.approx(1.0, abs=1e-15)
