"""Truncated-series engine and generating-function tests."""

from fractions import Fraction

import pytest

from qvolkenborn.algebra import RationalFunction
from qvolkenborn.qmeasure import QDescriptor
from qvolkenborn.qnumbers import k_number
from qvolkenborn.series import (TruncatedSeries, euler_gf,
                                f_q_coefficient_partial, f_q_series,
                                limit_consistency, scaled_coefficient,
                                series_exp, series_inverse)

F = Fraction


def S(*coeffs):
    return TruncatedSeries([F(c) for c in coeffs])


# ---------------------------------------------------------------------------
# arithmetic
# ---------------------------------------------------------------------------

def test_product_truncates():
    assert S(1, 1, 0) * S(1, -1, 0) == S(1, 0, -1)


def test_addition_identity():
    a = S(2, 3, 5)
    assert a + S(0, 0, 0) == a


def test_scale_doubles_coefficients():
    exp_t = series_exp(S(0, 1, 0, 0))
    doubled = exp_t.scale(2)
    assert all(doubled[n] == 2 * exp_t[n] for n in range(4))


def test_order_mismatch_rejected():
    with pytest.raises(ValueError):
        S(1, 0) + S(1, 0, 0)


# ---------------------------------------------------------------------------
# exp and inverse
# ---------------------------------------------------------------------------

def test_exp_of_zero():
    assert series_exp(S(0, 0, 0)) == S(1, 0, 0)


def test_exp_of_t():
    assert series_exp(S(0, 1, 0, 0)) == TruncatedSeries(
        [F(1), F(1), F(1, 2), F(1, 6)])


def test_exp_times_exp_of_negative_is_one():
    order = 8
    t = TruncatedSeries([F(0), F(1)], order)
    product = series_exp(t) * series_exp(t.scale(-1))
    assert product == TruncatedSeries([F(1)], order)


def test_exp_requires_zero_constant_term():
    with pytest.raises(ValueError):
        series_exp(S(1, 1))


def test_inverse_of_one():
    assert series_inverse(S(1, 0, 0)) == S(1, 0, 0)


def test_inverse_of_one_plus_t():
    assert series_inverse(S(1, 1, 0)) == S(1, -1, 1)


def test_inverse_requires_unit_constant_term():
    with pytest.raises(ValueError):
        series_inverse(S(0, 1))


def test_inverse_of_exp_is_exp_of_negative():
    order = 7
    t = TruncatedSeries([F(0), F(1)], order)
    assert series_inverse(series_exp(t)) == series_exp(t.scale(-1))


# ---------------------------------------------------------------------------
# Euler generating function
# ---------------------------------------------------------------------------

def test_euler_gf_low_coefficients():
    gf = euler_gf(4)
    assert gf[0] == 1
    assert scaled_coefficient(gf, 1) == F(-1, 2)
    assert scaled_coefficient(gf, 2) == 0
    assert scaled_coefficient(gf, 3) == F(1, 4)
    assert scaled_coefficient(gf, 4) == 0


# ---------------------------------------------------------------------------
# q-deformed generating function
# ---------------------------------------------------------------------------

def test_f_q_series_constant_term():
    sym = QDescriptor.symbolic()
    assert f_q_series(sym, 3)[0] == 1


def test_f_q_series_first_coefficient_is_k_one():
    sym = QDescriptor.symbolic()
    gf = f_q_series(sym, 3)
    assert scaled_coefficient(gf, 1) == k_number(1, sym)


def test_f_q_series_matches_numbers_up_to_ten():
    sym = QDescriptor.symbolic()
    gf = f_q_series(sym, 10)
    for n in range(11):
        assert scaled_coefficient(gf, n) == k_number(n, sym)


def test_f_q_series_rational_mode():
    qd = QDescriptor.rational(F(1, 3))
    gf = f_q_series(qd, 6)
    sym = QDescriptor.symbolic()
    for n in range(7):
        assert scaled_coefficient(gf, n) == k_number(n, sym).evaluate(F(1, 3))


def test_f_q_series_rejects_padic():
    from qvolkenborn.padic import padic_from_rational

    qd = QDescriptor.padic(padic_from_rational(6, 5, 8))
    with pytest.raises(ValueError):
        f_q_series(qd, 3)


# ---------------------------------------------------------------------------
# partial sums
# ---------------------------------------------------------------------------

def test_partial_sum_constant_coefficient_converges_to_one():
    ps = f_q_coefficient_partial(0, F(1, 2), 80)
    assert abs(ps.value - 1) <= ps.tail_bound
    assert ps.tail_bound < F(1, 2 ** 70)


def test_partial_sum_first_coefficient():
    ps = f_q_coefficient_partial(1, F(1, 2), 120)
    assert abs(ps.value - F(-2, 5)) < F(1, 2 ** 100)


def test_partial_sum_zero_terms_reports_full_bound():
    ps = f_q_coefficient_partial(2, F(1, 2), 0)
    assert ps.value == 0
    full = abs(F(3, 2)) * F(2) ** 2 / (1 - F(1, 2))
    assert ps.tail_bound == full


def test_partial_sum_requires_q_inside_unit_interval():
    with pytest.raises(ValueError):
        f_q_coefficient_partial(1, F(3, 2), 10)
    with pytest.raises(ValueError):
        f_q_coefficient_partial(1, F(0), 10)


def test_partial_sums_with_negative_q():
    ps = f_q_coefficient_partial(2, F(-1, 2), 150)
    sym = QDescriptor.symbolic()
    target = k_number(2, sym).evaluate(F(-1, 2))
    assert abs(ps.value - target) <= ps.tail_bound


# ---------------------------------------------------------------------------
# limit consistency
# ---------------------------------------------------------------------------

def test_limit_consistency_small():
    rows = limit_consistency(3)
    assert [r["E_n"] for r in rows] == ["1", "-1/2", "0", "1/4"]
    assert all(r["equal"] for r in rows)


def test_limit_consistency_full_report():
    rows = limit_consistency(12)
    assert len(rows) == 13
    assert all(r["equal"] for r in rows)


def test_gf_coefficient_limit_matches_euler():
    sym = QDescriptor.symbolic()
    gf = f_q_series(sym, 3)
    c1 = scaled_coefficient(gf, 1)
    assert isinstance(c1, RationalFunction)
    assert c1.limit_at_one() == F(-1, 2)
