import cmath
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qacs.acslimits import (
    Exponential,
    ExponentialAtOneError,
    Periodic,
    Polynomial,
    a_at_q_iterated,
    dft_coefficients,
    dft_evaluate,
    h_coefficients,
    limit_series,
    rhs_ceiling_form,
    rhs_exponential_case,
    rhs_periodic_case,
    rhs_polynomial_case,
    t_j_series,
)
from qacs.acslimits.closed_forms import ceiling_weight
from qacs.exact import zeta_power
from qacs.numbertheory import s_k_series
from qacs.series import TruncatedSeries


def S(*c):
    return TruncatedSeries(c)


ALT_THETA_10 = S(0, -1, 0, 0, 1, 0, 0, 0, 0, -1, 0)


def test_h_examples():
    assert h_coefficients((1,)) == [1]
    assert h_coefficients((0, 1)) == [0, 1]
    assert h_coefficients(()) == []
    assert h_coefficients((0, 0, 0)) == []


def test_t_j_examples():
    assert list(t_j_series(1, 4)) == [0, 1, 2, 2, 3]
    for j in (1, 2, 5):
        assert t_j_series(j, 0).is_zero()
    with pytest.raises(ValueError):
        t_j_series(0, 5)


def test_t_1_is_s0():
    assert t_j_series(1, 40) == s_k_series(0, 40)


def test_t_2_is_limit_for_identity():
    assert t_j_series(2, 40) == limit_series(Polynomial((0, 1)), 40)


def _numeric_t(j, x, terms=60):
    total = 0
    poch = 1
    for n in range(1, terms):
        poch *= 1 - x**n
        total += (-1) ** (n - 1) * x ** (n * (n + 1) // 2) / ((1 - x**n) ** j * poch)
    return total


@pytest.mark.parametrize("j", [1, 2, 3])
def test_t_j_numeric_evaluation(j):
    # the truncation error at q = 0.3 and order 60 is far below the tolerance
    x = 0.3
    series = t_j_series(j, 60)
    approx = sum(float(c) * x**m for m, c in enumerate(series))
    assert abs(approx - _numeric_t(j, x)) < 1e-12


def test_polynomial_case_examples():
    assert rhs_polynomial_case((1,), 20) == s_k_series(0, 20)
    assert rhs_polynomial_case((0, 1), 20) == t_j_series(2, 20)
    assert rhs_polynomial_case((0, 0), 20).is_zero()


@pytest.mark.parametrize("c", [(0, 0, 1), (1, 1, 1, 1), (Fraction(1, 2), 0, -3)])
def test_polynomial_case_against_limit(c):
    assert rhs_polynomial_case(c, 30) == limit_series(Polynomial(c), 30)


def test_exponential_examples():
    assert rhs_exponential_case(-1, 10) == ALT_THETA_10
    assert rhs_exponential_case(2, 40) == limit_series(Exponential(2), 40)
    with pytest.raises(ExponentialAtOneError):
        rhs_exponential_case(1, 5)


def test_exponential_series_argument():
    M = 10
    geometric = S(0, *([1] * M))
    # b * product is q + q^2 + q^4 + q^7 + ...
    assert rhs_exponential_case(TruncatedSeries.q(M), M, base=2) == \
        geometric - S(0, 1, 1, 0, 1, 0, 0, 1, 0, 0, 0)


def test_exponential_numeric_evaluation():
    # b/(1-b) - b (q;q)/(b;q) against floating point at b = 1/2, q = 0.2
    b, x = 0.5, 0.2
    qq = bq = 1.0
    for k in range(1, 200):
        qq *= 1 - x**k
        bq *= 1 - b * x ** (k - 1)
    expected = b / (1 - b) - b * qq / bq
    series = rhs_exponential_case(Fraction(1, 2), 50)
    assert abs(sum(float(c) * x**m for m, c in enumerate(series)) - expected) < 1e-12


def test_dft_examples():
    c = dft_coefficients((Fraction(5),))
    assert c == [5]
    c = dft_coefficients((-1, 1))
    assert c[0] == 0
    assert c[1] == -1


def test_dft_c0_is_mean():
    values = (3, -1, 4, 1, -5, 9)
    assert dft_coefficients(values)[0] == Fraction(sum(values), len(values))
    assert dft_coefficients(values)[0].is_rational()


def test_dft_against_complex_evaluation():
    values = (2, -7, 1, 8, 0)
    N = len(values)
    for k, ck in enumerate(dft_coefficients(values)):
        numeric = sum(f * cmath.exp(2j * cmath.pi * (1 - j) * k / N)
                      for j, f in enumerate(values, start=1)) / N
        z = cmath.exp(2j * cmath.pi / N)
        exact = sum(float(r) * z**i for i, r in enumerate(ck.residue))
        assert abs(numeric - exact) < 1e-12


periodic_values = st.integers(min_value=1, max_value=8).flatmap(
    lambda N: st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=4),
                       min_size=N, max_size=N))


@settings(max_examples=100, deadline=None)
@given(periodic_values)
def test_dft_round_trip(values):
    c = dft_coefficients(values)
    N = len(values)
    for n in range(1, 2 * N + 1):
        assert dft_evaluate(c, n) == values[(n - 1) % N]


def test_periodic_examples():
    assert rhs_periodic_case((1,), 20) == s_k_series(0, 20)
    assert rhs_periodic_case((-1, 1), 10) == ALT_THETA_10
    assert rhs_periodic_case((0, 0, 0), 10).is_zero()


@pytest.mark.parametrize("seed", range(6))
def test_periodic_forms_agree(seed):
    rng = random.Random(seed)
    N = rng.choice([2, 3, 4, 5, 6, 7, 8])
    values = tuple(Fraction(rng.randint(-9, 9)) for _ in range(N))
    M = 25
    limit = limit_series(Periodic(values), M)
    assert rhs_periodic_case(values, M) == limit
    assert rhs_ceiling_form(values, M) == limit
    assert a_at_q_iterated(Periodic(values), M) == limit


def test_periodic_coefficients_are_rational():
    for c in rhs_periodic_case((1, 2, 3, 4, 5), 15):
        assert isinstance(c, Fraction)


def test_ceiling_weight_alternating():
    for n in range(12):
        assert ceiling_weight((-1, 1), n) == (-1 if n % 2 else 0)


def test_ceiling_examples():
    assert rhs_ceiling_form((0, 0), 10).is_zero()
    assert rhs_ceiling_form((-1, 1), 10) == ALT_THETA_10
    with pytest.raises(ValueError):
        rhs_ceiling_form((), 5)


def test_iterated_examples():
    assert a_at_q_iterated(Exponential(-1), 10) == ALT_THETA_10
    assert a_at_q_iterated(Exponential(2), 40) == rhs_exponential_case(2, 40)
    assert a_at_q_iterated(Periodic((-1, 1)), 40) == limit_series(Periodic((-1, 1)), 40)


def test_iterated_cyclotomic_b():
    b = zeta_power(3, 1)
    spec = Exponential(b)
    assert a_at_q_iterated(spec, 12) == limit_series(spec, 12)
    assert rhs_exponential_case(b, 12) == limit_series(spec, 12)


def test_iterated_rejects_other_kinds():
    with pytest.raises(TypeError):
        a_at_q_iterated(Polynomial((1,)), 5)
