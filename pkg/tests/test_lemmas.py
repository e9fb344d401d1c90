from fractions import Fraction

import pytest

from qacs.acslimits import (
    alternating_expressions,
    euler_product_check,
    q_gauss_limit,
    rootid_check,
    s0_forms,
    triangular_expressions,
)
from qacs.acslimits.lemmas import rootid_closed_form
from qacs.exact import rational_part
from qacs.series import TruncatedSeries


@pytest.mark.parametrize("x", [0, Fraction(1, 2), -1, 5, Fraction(-7, 3)])
def test_euler_product_constants(x):
    assert euler_product_check(x, 30) == TruncatedSeries.one(30)


def test_euler_product_series_argument():
    q = TruncatedSeries.q(30)
    assert euler_product_check(q, 30) == TruncatedSeries.one(30)
    assert euler_product_check(-q, 30) == TruncatedSeries.one(30)


def test_s0_forms_agree():
    forms = s0_forms(60)
    assert forms["pochhammer_weighted"] == forms["divisor_sum"]
    assert forms["alternating_triangular"] == forms["divisor_sum"]
    assert list(forms["divisor_sum"])[:5] == [0, 1, 2, 2, 3]


def test_q_gauss_b_equals_c_vanishes():
    lhs, rhs = q_gauss_limit(Fraction(3), Fraction(3), 30)
    assert lhs.is_zero()
    assert rhs.is_zero()


@pytest.mark.parametrize("b,c", [(Fraction(1, 2), Fraction(1, 3)), (-1, Fraction(2, 5)), (4, -2)])
def test_q_gauss_pairs(b, c):
    lhs, rhs = q_gauss_limit(b, c, 40)
    assert lhs == rhs


def test_q_gauss_rejections():
    with pytest.raises(ValueError):
        q_gauss_limit(0, 2, 5)
    with pytest.raises(ZeroDivisionError):
        q_gauss_limit(2, 1, 5)


def test_rootid_examples():
    value, closed = rootid_check(2, 0)
    assert closed == Fraction(1, 2)
    assert rational_part(value) == Fraction(1, 2)
    value, closed = rootid_check(3, 1)
    assert closed == -1
    assert value == -1


@pytest.mark.parametrize("N", range(1, 13))
def test_rootid_j_zero(N):
    value, closed = rootid_check(N, 0)
    assert closed == Fraction(N - 1, 2)
    assert value == closed


def test_rootid_closed_form_periodic_shift():
    # shifting j by N leaves the closed form unchanged
    for N in range(1, 9):
        for j in range(-N, N + 1):
            assert rootid_closed_form(N, j + N) == rootid_closed_form(N, j)


def test_rootid_rejects_nonpositive():
    with pytest.raises(ValueError):
        rootid_check(0, 1)


def test_alternating_expressions():
    e = alternating_expressions(40)
    for name in ("theta", "odd_pochhammer_sum", "half_product", "periodic_case",
                 "ceiling_form", "exponential_case"):
        assert e[name] == e["limit"], name
    printed = e["half_product_printed"]
    assert printed != e["limit"]
    assert printed[0] == -1
    assert e["limit"][0] == 0


def test_triangular_expressions():
    e = triangular_expressions(40)
    for name in ("limit_a_n", "limit_via_beta", "exponential_case", "theta"):
        assert e[name] == e["product"], name
    assert e["theta_from_n1"] != e["product"]
    assert list(e["product"])[:8] == [1, 1, 0, 1, 0, 0, 1, 0]
