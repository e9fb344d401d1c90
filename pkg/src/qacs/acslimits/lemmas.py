"""Auxiliary identities: Euler's sum, the three S_0 forms, the a -> infinity
q-Gauss limit, the roots-of-unity sum, and the expressions of the two worked
examples (f(n) = (-1)^n and f(n) = q^n in base q^2)."""

from __future__ import annotations

from fractions import Fraction

from ..exact import CyclotomicNumber, as_rational, cyc_invert, zeta_power
from ..numbertheory import s_k_series, theta_alternating_squares, theta_triangular
from ..series import (
    TruncatedSeries,
    euler_sum,
    invert_unit,
    pochhammer_finite,
    pochhammer_infinite,
    pochhammer_infinite_series_arg,
    substitute_power,
)
from .closed_forms import rhs_ceiling_form, rhs_exponential_case, rhs_periodic_case
from .recurrence import CustomSeries, limit_of_a_n, limit_series, Periodic

__all__ = [
    "euler_product_check",
    "s0_forms",
    "q_gauss_limit",
    "rootid_closed_form",
    "rootid_check",
    "alternating_expressions",
    "triangular_expressions",
]


def euler_product_check(x, M: int) -> TruncatedSeries:
    """euler_sum(x) * (x;q)_inf, which should be exactly 1."""
    return euler_sum(x, M) * pochhammer_infinite(x, M)


def s0_forms(M: int) -> dict[str, TruncatedSeries]:
    """Three expressions for S_0(q): divisor counts and two q-hypergeometric sums."""
    q = TruncatedSeries.q(M)
    qq = pochhammer_infinite(q, M)

    weighted = TruncatedSeries.zero(M)
    inv_poch = TruncatedSeries.one(M)
    for n in range(1, M + 1):
        inv_poch = inv_poch * invert_unit(1 - TruncatedSeries.monomial(1, n, M))
        weighted = weighted + n * inv_poch.shift(n)

    alternating = TruncatedSeries.zero(M)
    inv_poch = TruncatedSeries.one(M)
    n = 1
    while n * (n + 1) // 2 <= M:
        geo = invert_unit(1 - TruncatedSeries.monomial(1, n, M))
        inv_poch = inv_poch * geo
        alternating = alternating + (-1) ** (n + 1) * (inv_poch * geo).shift(n * (n + 1) // 2)
        n += 1

    return {
        "divisor_sum": s_k_series(0, M),
        "pochhammer_weighted": qq * weighted,
        "alternating_triangular": alternating,
    }


def q_gauss_limit(b, c, M: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Both sides of lim_{a->inf} 2phi1(a, b; c; q, c/(ab)) = (c/b;q)_inf / (c;q)_inf.

    Termwise, (a;q)_n (c/(ab))^n tends to (-1)^n q^(n(n-1)/2) (c/b)^n, so the
    left side is sum_n (b;q)_n (-1)^n q^(n(n-1)/2) (c/b)^n / ((q;q)_n (c;q)_n).
    """
    b, c = as_rational(b), as_rational(c)
    if b == 0:
        raise ValueError("the q-Gauss limit needs b != 0")
    if c == 1:
        raise ZeroDivisionError("(c;q)_n has a vanishing constant term for c = 1")
    ratio = c / b
    lhs = TruncatedSeries.zero(M)
    n = 0
    while n * (n - 1) // 2 <= M:
        num = pochhammer_finite(b, n, M)
        den = pochhammer_finite(TruncatedSeries.q(M), n, M) * pochhammer_finite(c, n, M)
        term = (num * invert_unit(den)) * ((-1) ** n * ratio**n)
        lhs = lhs + term.shift(n * (n - 1) // 2)
        n += 1
    rhs = pochhammer_infinite(ratio, M) * invert_unit(pochhammer_infinite(c, M))
    return lhs, rhs


def rootid_closed_form(N: int, j: int) -> Fraction:
    """(N-1)/2 + j - ceil(j/N) N."""
    return Fraction(N - 1, 2) + j - (-((-j) // N)) * N


def rootid_check(N: int, j: int) -> tuple[CyclotomicNumber, Fraction]:
    """(sum_{1<=k<=N-1} zeta_N^(jk) / (1 - zeta_N^k) in Q(zeta_N), its closed form)."""
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    acc = CyclotomicNumber.embed(N, 0)
    for k in range(1, N):
        acc = acc + zeta_power(N, j * k) * cyc_invert(1 - zeta_power(N, k))
    return acc, rootid_closed_form(N, j)


def alternating_expressions(M: int) -> dict[str, TruncatedSeries]:
    """Every expression claimed equal to lim (sum (-1)^l - a_n) for f(n) = (-1)^n.

    ``half_product_printed`` carries the opposite (commonly printed) sign,
    ``half_product`` the sign forced by the exponential case at b = -1.
    """
    values = (-1, 1)
    q = TruncatedSeries.q(M)
    qq = pochhammer_infinite(q, M)
    ratio = qq * invert_unit(pochhammer_infinite(-q, M))

    odd = TruncatedSeries.zero(M)
    inv_poch = TruncatedSeries.one(M)
    for n in range(1, M + 1):
        inv_poch = inv_poch * invert_unit(1 - TruncatedSeries.monomial(1, n, M))
        if n % 2:
            odd = odd + inv_poch.shift(n)

    half = Fraction(1, 2)
    return {
        "limit": limit_series(Periodic(values), M),
        "theta": (theta_alternating_squares(M) - 1) * half,
        "odd_pochhammer_sum": -(qq * odd),
        "half_product": -half + ratio * half,
        "half_product_printed": -half - ratio * half,
        "periodic_case": rhs_periodic_case(values, M),
        "ceiling_form": rhs_ceiling_form(values, M),
        "exponential_case": rhs_exponential_case(-1, M),
    }


def _q_power_term(n: int, M: int) -> TruncatedSeries:
    return TruncatedSeries.monomial(1, n, M)


def triangular_expressions(M: int) -> dict[str, TruncatedSeries]:
    """Expressions claimed equal to q^(-1) lim a_n(q^2) for a_n(q^2) = q^n + (1-q^(2n-2)) a_{n-1}(q^2).

    ``theta_from_n1`` is the triangular sum started at n = 1, the other
    normalization in circulation; it differs from the product by the constant 1.
    """
    spec = CustomSeries(_q_power_term, base=2, name="q^n base q^2")
    # q^(-1) costs one order, so work one order higher
    limit_a = limit_of_a_n(spec, M + 1).unshift(1)

    geometric = invert_unit(1 - TruncatedSeries.q(M + 1)) - 1
    via_beta = (geometric - limit_series(spec, M + 1)).unshift(1)

    q = TruncatedSeries.q(M)
    q2q2 = substitute_power(pochhammer_infinite(q, M), 2)
    qq2 = pochhammer_infinite_series_arg(q, M, base=2)
    exp_case = rhs_exponential_case(TruncatedSeries.q(M + 1), M + 1, base=2)
    return {
        "limit_a_n": limit_a,
        "limit_via_beta": via_beta,
        "product": q2q2 * invert_unit(qq2),
        "exponential_case": (geometric - exp_case).unshift(1),
        "theta": theta_triangular(M),
        "theta_from_n1": theta_triangular(M) - 1,
    }
