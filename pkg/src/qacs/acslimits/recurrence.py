"""The a_n(q) recursion, its closed form, and the stabilized limit of
beta_n = sum_{l<=n} f(l) - a_n(q).

Every recurrence here has the shape

    a_n = f(n) + (1 - q^(t(n-1))) a_{n-1},    a_0 = 0,

with t = 1 except for base-substituted sequences (t = 2 gives a_n(q^2)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ..exact import CyclotomicNumber, as_rational
from ..series import TruncatedSeries, invert_unit, pochhammer_finite

__all__ = [
    "RecurrenceSpec",
    "Polynomial",
    "Exponential",
    "Periodic",
    "CustomSeries",
    "ExponentialAtOneError",
    "a_n",
    "a_n_closed_form",
    "beta_n",
    "limit_series",
    "limit_of_a_n",
]


class ExponentialAtOneError(ValueError):
    """b = 1 is not an exponential driving sequence."""

    def __init__(self):
        super().__init__(
            "Exponential(b) requires b != 1; f(n) = 1 is the polynomial case, "
            "use Polynomial([1]) instead"
        )


class RecurrenceSpec:
    """The driving sequence f(n) of the recursion, plus the base exponent t."""

    base: int = 1

    def term(self, n: int, M: int) -> TruncatedSeries:
        raise NotImplementedError

    @property
    def label(self) -> str:
        return type(self).__name__


def _rationals(values) -> tuple[Fraction, ...]:
    return tuple(as_rational(v) for v in values)


@dataclass(frozen=True)
class Polynomial(RecurrenceSpec):
    """f(n) = sum_k coeffs[k] n^k."""

    coeffs: tuple
    base: int = 1

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _rationals(self.coeffs))

    def value(self, n: int) -> Fraction:
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * n + c
        return total

    def term(self, n, M):
        return TruncatedSeries.constant(self.value(n), M)

    @property
    def label(self):
        return "poly(" + ",".join(str(c) for c in self.coeffs) + ")"


@dataclass(frozen=True)
class Exponential(RecurrenceSpec):
    """f(n) = b^n for a constant b != 1."""

    b: Fraction
    base: int = 1

    def __post_init__(self):
        b = self.b
        if isinstance(b, TruncatedSeries):
            raise TypeError("series-valued b goes through CustomSeries(f(n) = b^n)")
        if not isinstance(b, CyclotomicNumber):
            b = as_rational(b)
        if b == 1:
            raise ExponentialAtOneError()
        object.__setattr__(self, "b", b)

    def term(self, n, M):
        return TruncatedSeries.constant(self.b**n, M)

    @property
    def label(self):
        return f"exp({self.b})"


@dataclass(frozen=True)
class Periodic(RecurrenceSpec):
    """f(n) = values[(n - 1) mod N], i.e. ``values`` lists f(1), ..., f(N)."""

    values: tuple
    base: int = 1

    def __post_init__(self):
        if not self.values:
            raise ValueError("a periodic sequence needs at least one value")
        object.__setattr__(self, "values", _rationals(self.values))

    @property
    def period(self) -> int:
        return len(self.values)

    def value(self, n: int) -> Fraction:
        return self.values[(n - 1) % len(self.values)]

    def term(self, n, M):
        return TruncatedSeries.constant(self.value(n), M)

    @property
    def label(self):
        return "periodic(" + ",".join(str(v) for v in self.values) + ")"


@dataclass(frozen=True)
class CustomSeries(RecurrenceSpec):
    """f(n) given by a callable ``f(n, M)`` returning a series of order M."""

    f: Callable[[int, int], TruncatedSeries]
    base: int = 1
    name: str = field(default="custom")

    def term(self, n, M):
        return self.f(n, M)

    @property
    def label(self):
        return self.name


def _iterate(spec: RecurrenceSpec, n: int, M: int):
    """Yield (k, a_k, sum_{l<=k} f(l)) for k = 1..n."""
    a = TruncatedSeries.zero(M)
    total = TruncatedSeries.zero(M)
    t = spec.base
    for k in range(1, n + 1):
        fk = spec.term(k, M)
        a = fk + a - a.shift(t * (k - 1))
        total = total + fk
        yield k, a, total


def a_n(spec: RecurrenceSpec, n: int, M: int) -> TruncatedSeries:
    """The n-th iterate of the recursion, truncated at order M."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    a = TruncatedSeries.zero(M)
    for _, a, _ in _iterate(spec, n, M):
        pass
    return a


def a_n_closed_form(spec: RecurrenceSpec, n: int, M: int) -> TruncatedSeries:
    """(Q;Q)_{n-1} * sum_{0<=j<=n-1} f(j+1) / (Q;Q)_j with Q = q^t."""
    if n < 1:
        raise ValueError(f"the closed form needs n >= 1, got {n}")
    t = spec.base
    qt = TruncatedSeries.monomial(1, t, M)
    total = TruncatedSeries.zero(M)
    inv = TruncatedSeries.one(M)
    for j in range(n):
        if j:
            inv = inv * invert_unit(1 - qt.shift(t * (j - 1)))
        total = total + spec.term(j + 1, M) * inv
    return pochhammer_finite(qt, n - 1, M, base=t) * total


def beta_n(spec: RecurrenceSpec, n: int, M: int) -> TruncatedSeries:
    """sum_{l<=n} f(l) - a_n(q), truncated at order M."""
    beta = TruncatedSeries.zero(M)
    for _, a, total in _iterate(spec, n, M):
        beta = total - a
    return beta


def limit_series(spec: RecurrenceSpec, M: int) -> TruncatedSeries:
    """lim_n beta_n modulo q^(M+1), read off at n = M + 2.

    beta_n - beta_{n-1} = q^(t(n-1)) a_{n-1} has valuation >= n - 1, so all
    coefficients up to q^M are frozen from n = M + 1 on.
    """
    return beta_n(spec, M + 2, M)


def limit_of_a_n(spec: RecurrenceSpec, M: int) -> TruncatedSeries:
    """lim_n a_n(q) for sequences whose partial sums converge formally (e.g. f(n) = q^n).

    a_n - a_{n-1} = f(n) - q^(t(n-1)) a_{n-1}, so a_{M+2} has stabilized as long as
    f(n) has valuation >= n - 1; that condition is checked.
    """
    for n in range(1, M + 3):
        val = spec.term(n, M).valuation()
        if val is not None and val < n - 1:
            raise ValueError(f"f({n}) has valuation {val} < {n - 1}; a_n need not stabilize")
    return a_n(spec, M + 2, M)
