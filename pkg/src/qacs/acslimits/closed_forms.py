"""Closed-form right-hand sides for lim (sum f - a_n) in the polynomial,
exponential and periodic cases, plus the iterated functional-equation value
A(q;q)."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from ..exact import (
    CyclotomicNumber,
    NonRationalError,
    as_rational,
    cyc_invert,
    rational_part,
    zeta_power,
)
from ..numbertheory import s_k_series, stirling2
from ..series import (
    TruncatedSeries,
    invert_unit,
    pochhammer_infinite,
    pochhammer_infinite_series_arg,
    substitute_power,
)
from .recurrence import Exponential, ExponentialAtOneError, Periodic, RecurrenceSpec

__all__ = [
    "SymmetrizationError",
    "h_coefficients",
    "t_j_series",
    "rhs_polynomial_case",
    "rhs_exponential_case",
    "dft_coefficients",
    "dft_evaluate",
    "rhs_periodic_case",
    "ceiling_weight",
    "rhs_ceiling_form",
    "a_at_q_iterated",
]


class SymmetrizationError(NonRationalError):
    """A periodic-case coefficient kept an irrational part after summing over k."""


def _trim_poly(c) -> list[Fraction]:
    c = [as_rational(x) for x in c]
    while c and c[-1] == 0:
        c.pop()
    return c


def h_coefficients(c) -> list[Fraction]:
    """(h_1, ..., h_{d+1}) for f(n) = sum_k c[k] n^k of degree d.

    h_1 = c_0 is taken as given; for j >= 2 the l-sum stops at l = d since
    S(k, l) vanishes for l > k.
    """
    c = _trim_poly(c)
    if not c:
        return []
    deg = len(c) - 1
    h = [c[0]]
    for j in range(2, deg + 2):
        total = Fraction(0)
        for l in range(j - 1, deg + 1):
            inner = sum((c[k] * stirling2(k, l) for k in range(l, deg + 1)), Fraction(0))
            if inner:
                sign = -1 if (l - j - 1) % 2 else 1
                total += sign * comb(l - 1, j - 2) * factorial(l) * inner
        h.append(total)
    return h


def t_j_series(j: int, M: int) -> TruncatedSeries:
    """sum_{n>=1} (-1)^(n-1) q^(n(n+1)/2) / ((1-q^n)^j (q;q)_n)."""
    if j < 1:
        raise ValueError(f"j must be positive, got {j}")
    total = TruncatedSeries.zero(M)
    inv_poch = TruncatedSeries.one(M)
    n = 1
    while n * (n + 1) // 2 <= M:
        geo = invert_unit(1 - TruncatedSeries.monomial(1, n, M))
        inv_poch = inv_poch * geo
        term = inv_poch * geo**j
        total = total + (-1) ** (n - 1) * term.shift(n * (n + 1) // 2)
        n += 1
    return total


def rhs_polynomial_case(c, M: int) -> TruncatedSeries:
    """sum_j h_j T_j(q) for the polynomial driving sequence with coefficients c."""
    total = TruncatedSeries.zero(M)
    for j, h in enumerate(h_coefficients(c), start=1):
        if h:
            total = total + h * t_j_series(j, M)
    return total


def rhs_exponential_case(b, M: int, base: int = 1) -> TruncatedSeries:
    """b/(1-b) - b (Q;Q)_inf / (b;Q)_inf with Q = q^base.

    ``b`` is a constant other than 1, or a series whose constant term is not 1
    (e.g. b = q with base 2 for the triangular-number identity).
    """
    if isinstance(b, TruncatedSeries):
        if b.order < M:
            raise ValueError("b is known to a lower order than requested")
        b = b.truncate(M)
        if b.coeffs[0] == 1:
            raise ExponentialAtOneError()
        one_minus_b = 1 - b
    else:
        if not isinstance(b, CyclotomicNumber):
            b = as_rational(b)
        if b == 1:
            raise ExponentialAtOneError()
        one_minus_b = TruncatedSeries.constant(1 - b, M)
    qq = substitute_power(pochhammer_infinite(TruncatedSeries.q(M), M), base)
    bq = pochhammer_infinite_series_arg(b, M, base=base)
    return b * invert_unit(one_minus_b) - b * qq * invert_unit(bq)


def dft_coefficients(values) -> list[CyclotomicNumber]:
    """c_k = (1/N) sum_{1<=j<=N} f(j) zeta_N^((1-j)k), k = 0..N-1, in Q(zeta_N)."""
    values = [as_rational(v) for v in values]
    N = len(values)
    if N < 1:
        raise ValueError("a periodic sequence needs at least one value")
    out = []
    for k in range(N):
        acc = CyclotomicNumber.embed(N, 0)
        for j, f in enumerate(values, start=1):
            if f:
                acc = acc + f * zeta_power(N, (1 - j) * k)
        out.append(acc / N)
    return out


def dft_evaluate(c: list[CyclotomicNumber], n: int) -> CyclotomicNumber:
    """f(n) = sum_k c_k zeta_N^((n-1)k), the inverse of :func:`dft_coefficients`."""
    N = len(c)
    acc = CyclotomicNumber.embed(N, 0)
    for k, ck in enumerate(c):
        acc = acc + ck * zeta_power(N, (n - 1) * k)
    return acc


def _project(s: TruncatedSeries) -> TruncatedSeries:
    try:
        return s.map(rational_part)
    except NonRationalError as exc:
        raise SymmetrizationError(str(exc)) from exc


def rhs_periodic_case(values, M: int) -> TruncatedSeries:
    """c_0 S_0 - (q;q)_inf sum_{k>=1} c_k/(zeta^k;q)_inf + sum_{k>=1} c_k/(1-zeta^k).

    Evaluated over Q(zeta_N), then projected to Q coefficientwise.
    """
    c = dft_coefficients(values)
    N = len(c)
    like = c[0]
    s0 = s_k_series(0, M)
    total = TruncatedSeries.zero(M, like=like) + c[0] * s0
    product_part = TruncatedSeries.zero(M, like=like)
    constant_part = like * 0
    for k in range(1, N):
        if not c[k]:
            continue
        z = zeta_power(N, k)
        product_part = product_part + c[k] * invert_unit(pochhammer_infinite(z, M))
        constant_part = constant_part + c[k] * cyc_invert(1 - z)
    qq = pochhammer_infinite(TruncatedSeries.q(M), M)
    total = total - qq * product_part + constant_part
    return _project(total)


def ceiling_weight(values, n: int) -> Fraction:
    """sum_{1<=j<=N} f(j) * ceil((n + 1 - j) / N)."""
    N = len(values)
    return sum(
        (as_rational(f) * -((j - n - 1) // N) for j, f in enumerate(values, start=1)),
        Fraction(0),
    )


def rhs_ceiling_form(values, M: int) -> TruncatedSeries:
    """(q;q)_inf sum_{n>=0} q^n/(q;q)_n * ceiling_weight(n), all over Q."""
    if not values:
        raise ValueError("a periodic sequence needs at least one value")
    total = TruncatedSeries.zero(M)
    inv_poch = TruncatedSeries.one(M)
    for n in range(M + 1):
        if n:
            inv_poch = inv_poch * invert_unit(1 - TruncatedSeries.monomial(1, n, M))
        w = ceiling_weight(values, n)
        if w:
            total = total + w * inv_poch.shift(n)
    return pochhammer_infinite(TruncatedSeries.q(M), M) * total


def _geometric_tail(ratio, m: int, M: int, like) -> TruncatedSeries:
    """sum_{i>=1} ratio^(i-1) q^(m i), i.e. q^m / (1 - ratio q^m)."""
    z = like * 0
    coeffs = [z] * (M + 1)
    power = z + 1
    i = 1
    while m * i <= M:
        coeffs[m * i] = power
        power = power * ratio
        i += 1
    return TruncatedSeries(coeffs)


def _f_at_q_power(spec: RecurrenceSpec, m: int, M: int, dft=None) -> TruncatedSeries:
    """F(q^m) = sum_{n>=1} f(n) q^(mn) in closed form."""
    if isinstance(spec, Exponential):
        return spec.b * _geometric_tail(spec.b, m, M, spec.b)
    c = dft
    N = len(c)
    total = TruncatedSeries.zero(M, like=c[0])
    for k, ck in enumerate(c):
        if ck:
            total = total + ck * _geometric_tail(zeta_power(N, k), m, M, c[0])
    return total


def a_at_q_iterated(spec: RecurrenceSpec, M: int) -> TruncatedSeries:
    """A(q;q) = sum_{n>=0} (-1)^n F(q^(n+1)) q^(n(n+1)/2) / (q;q)_{n+1}."""
    if not isinstance(spec, (Exponential, Periodic)):
        raise TypeError(
            f"the iterated functional equation needs a closed form for F; "
            f"{type(spec).__name__} has none"
        )
    if spec.base != 1:
        raise ValueError("the iterated functional equation is implemented for base 1 only")
    dft = dft_coefficients(spec.values) if isinstance(spec, Periodic) else None
    like = dft[0] if dft else (spec.b * 0 + Fraction(0))
    total = TruncatedSeries.zero(M, like=like)
    inv_poch = TruncatedSeries.one(M)
    n = 0
    while (n + 1) + n * (n + 1) // 2 <= M:
        inv_poch = inv_poch * invert_unit(1 - TruncatedSeries.monomial(1, n + 1, M))
        term = _f_at_q_power(spec, n + 1, M, dft) * inv_poch
        total = total + (-1) ** n * term.shift(n * (n + 1) // 2)
        n += 1
    if dft is not None:
        return _project(total)
    return total
