"""Dense truncated power series in q.

A :class:`TruncatedSeries` of order M stands for a power series known modulo
q^(M+1).  Coefficients may live in any exact ring supporting ``+ - *`` with
ints (here: ``Fraction`` and :class:`qacs.exact.CyclotomicNumber`).  Binary
operations between series of different orders truncate to the smaller order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .exact import CyclotomicNumber, as_rational

__all__ = [
    "TruncatedSeries",
    "NonUnitError",
    "mul",
    "invert_unit",
    "substitute_power",
    "pochhammer_finite",
    "pochhammer_infinite",
    "pochhammer_infinite_series_arg",
    "euler_sum",
    "to_json",
    "from_json",
]


class NonUnitError(ZeroDivisionError):
    """Raised when inverting a series whose constant term is not a unit."""


def _coerce_coeff(c):
    if isinstance(c, (Fraction, CyclotomicNumber)):
        return c
    return as_rational(c)


class TruncatedSeries:
    """c_0 + c_1 q + ... + c_M q^M + O(q^(M+1)).  Immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        coeffs = tuple(_coerce_coeff(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # construction -------------------------------------------------------

    @classmethod
    def zero(cls, M: int, like=None) -> "TruncatedSeries":
        z = Fraction(0) if like is None else like * 0
        return cls((z,) * (M + 1))

    @classmethod
    def one(cls, M: int, like=None) -> "TruncatedSeries":
        return cls.constant(1, M, like)

    @classmethod
    def constant(cls, c, M: int, like=None) -> "TruncatedSeries":
        return cls.monomial(c, 0, M, like)

    @classmethod
    def monomial(cls, c, k: int, M: int, like=None) -> "TruncatedSeries":
        """c * q**k truncated at order M."""
        z = Fraction(0) if like is None else like * 0
        c = _coerce_coeff(c) + z
        coeffs = [z] * (M + 1)
        if k <= M:
            coeffs[k] = c
        return cls(coeffs)

    @classmethod
    def q(cls, M: int) -> "TruncatedSeries":
        return cls.monomial(1, 1, M)

    # basic access -------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, m):
        return self.coeffs[m]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if all vanish."""
        for m, c in enumerate(self.coeffs):
            if c:
                return m
        return None

    def is_zero(self) -> bool:
        return self.valuation() is None

    def truncate(self, M: int) -> "TruncatedSeries":
        if M > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {M}")
        return TruncatedSeries(self.coeffs[: M + 1])

    def unshift(self, k: int) -> "TruncatedSeries":
        """Divide by q**k; the first k coefficients must vanish.  The order drops by k."""
        if any(self.coeffs[:k]):
            raise ValueError(f"series is not divisible by q^{k}")
        if k > self.order:
            raise ValueError(f"dividing by q^{k} leaves nothing of an order-{self.order} series")
        return TruncatedSeries(self.coeffs[k:])

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by q**k (k >= 0), keeping the order."""
        if k < 0:
            raise ValueError("negative shifts leave the power series ring")
        z = self.coeffs[0] * 0
        return TruncatedSeries(((z,) * k + self.coeffs)[: self.order + 1])

    def map(self, fn: Callable) -> "TruncatedSeries":
        return TruncatedSeries(fn(c) for c in self.coeffs)

    def substitute_power(self, t: int) -> "TruncatedSeries":
        return substitute_power(self, t)

    def inverse(self) -> "TruncatedSeries":
        return invert_unit(self)

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            M = min(self.order, other.order)
            return TruncatedSeries(a + b for a, b in zip(self.coeffs[: M + 1], other.coeffs))
        return TruncatedSeries((self.coeffs[0] + other,) + self.coeffs[1:])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        return TruncatedSeries(c * other for c in self.coeffs)

    def __rmul__(self, other):
        return TruncatedSeries(other * c for c in self.coeffs)

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, invert_unit(other))
        return TruncatedSeries(c / other for c in self.coeffs)

    def __rtruediv__(self, other):
        return invert_unit(self) * other

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = TruncatedSeries.one(self.order, like=self.coeffs[0])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]})"

    def __str__(self):
        parts = []
        for m, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if m == 0 else ("q" if m == 1 else f"q^{m}")
            if not mono:
                parts.append(f"({c})" if isinstance(c, CyclotomicNumber) else str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                shown = f"({c})" if isinstance(c, CyclotomicNumber) else str(c)
                parts.append(f"{shown}*{mono}")
        body = " + ".join(parts).replace("+ -", "- ") if parts else "0"
        return f"{body} + O(q^{self.order + 1})"


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated at the smaller of the two orders."""
    M = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    nz = [(i, ac[i]) for i in range(M + 1) if ac[i]]
    out = []
    zero = ac[0] * 0 + bc[0] * 0
    for m in range(M + 1):
        acc = zero
        for i, ai in nz:
            if i > m:
                break
            bj = bc[m - i]
            if bj:
                acc = acc + ai * bj
        out.append(acc)
    return TruncatedSeries(out)


def invert_unit(a: TruncatedSeries) -> TruncatedSeries:
    """Reciprocal of a series whose constant term is invertible."""
    a0 = a.coeffs[0]
    if not a0:
        raise NonUnitError("constant term is zero; the series is not a unit")
    try:
        inv0 = 1 / a0
    except ZeroDivisionError as exc:
        raise NonUnitError(f"constant term {a0} is not invertible") from exc
    nz = [(i, a.coeffs[i]) for i in range(1, a.order + 1) if a.coeffs[i]]
    out = [inv0]
    for m in range(1, a.order + 1):
        acc = inv0 * 0
        for i, ai in nz:
            if i > m:
                break
            acc = acc + ai * out[m - i]
        out.append(-acc * inv0)
    return TruncatedSeries(out)


def substitute_power(a: TruncatedSeries, t: int) -> TruncatedSeries:
    """a(q**t) at the same order."""
    if t < 1:
        raise ValueError(f"substitution exponent must be positive, got {t}")
    M = a.order
    z = a.coeffs[0] * 0
    out = [z] * (M + 1)
    for m in range(M // t + 1):
        out[t * m] = a.coeffs[m]
    return TruncatedSeries(out)


def _one_like(a, M: int) -> list:
    if isinstance(a, TruncatedSeries):
        like = a.coeffs[0]
    else:
        like = _coerce_coeff(a)
    z = like * 0
    return [z + 1] + [z] * M


def _times_binomial(coeffs: list, a, s: int) -> None:
    """In place: coeffs *= (1 - a q**s) for a constant a."""
    M = len(coeffs) - 1
    if s == 0:
        factor = 1 - a
        for m in range(M + 1):
            coeffs[m] = coeffs[m] * factor
        return
    for m in range(M, s - 1, -1):
        prev = coeffs[m - s]
        if prev:
            coeffs[m] = coeffs[m] - a * prev
    return


def _pochhammer(a, count: int | None, M: int, base: int) -> TruncatedSeries:
    """prod_{0 <= j < count} (1 - a q^(base*j)), count None meaning infinite."""
    coeffs = _one_like(a, M)
    if isinstance(a, TruncatedSeries):
        val = a.valuation()
        if val is None:
            return TruncatedSeries(coeffs)
        acc = TruncatedSeries(coeffs)
        j = 0
        while (count is None or j < count) and base * j + val <= M:
            acc = acc * (1 - a.truncate(M).shift(base * j))
            j += 1
        return acc
    a = _coerce_coeff(a)
    if not a:
        return TruncatedSeries(coeffs)
    j = 0
    # factors with base*j > M are 1 modulo q^(M+1)
    while (count is None or j < count) and base * j <= M:
        _times_binomial(coeffs, a, base * j)
        j += 1
    return TruncatedSeries(coeffs)


def pochhammer_finite(a, n: int, M: int, base: int = 1) -> TruncatedSeries:
    """(a; q^base)_n truncated at order M; ``a`` is a constant or a series."""
    if n < 0:
        raise ValueError(f"Pochhammer length must be non-negative, got {n}")
    return _pochhammer(a, n, M, base)


def pochhammer_infinite(a, M: int) -> TruncatedSeries:
    """(a; q)_infinity truncated at order M.

    Factors 1 - a q^j with j > M are congruent to 1 and are dropped.
    """
    return _pochhammer(a, None, M, 1)


def pochhammer_infinite_series_arg(a, M: int, base: int = 1) -> TruncatedSeries:
    """(a; q^base)_infinity where ``a`` may itself be a series, e.g. (q; q^2)_inf."""
    if isinstance(a, TruncatedSeries) and a.order < M:
        raise ValueError("argument series is known to a lower order than requested")
    return _pochhammer(a, None, M, base)


def _divide_by_binomial(coeffs: list, s: int) -> None:
    """In place: coeffs /= (1 - q**s), s >= 1."""
    for m in range(s, len(coeffs)):
        prev = coeffs[m - s]
        if prev:
            coeffs[m] = coeffs[m] + prev


def euler_sum(x, M: int) -> TruncatedSeries:
    """sum_{n>=0} x^n / (q;q)_n truncated at order M.

    For a series x with zero constant term the sum is finite modulo q^(M+1).
    For a constant x != 1 the terms with n >= M all share the same truncated
    denominator 1/(q;q)_M, so the tail is summed exactly as the geometric
    series x^M / (1 - x).  The result equals 1/(x;q)_inf as rational functions
    of x, which is the analytic value wherever |x| < 1.
    """
    if isinstance(x, TruncatedSeries):
        x = x.truncate(M) if x.order > M else x
        if x.order < M:
            raise ValueError("argument series is known to a lower order than requested")
        if x.coeffs[0]:
            raise ValueError("euler_sum needs a series argument with zero constant term")
        val = x.valuation()
        term = TruncatedSeries(_one_like(x, M))
        total = term
        if val is None:
            return total
        n = 1
        while n * val <= M:
            coeffs = list((term * x).coeffs)
            _divide_by_binomial(coeffs, n)
            term = TruncatedSeries(coeffs)
            total = total + term
            n += 1
        return total

    x = _coerce_coeff(x)
    if x == 1:
        raise ZeroDivisionError("euler_sum has a pole at x = 1 (since (1;q)_inf = 0)")
    coeffs = _one_like(x, M)
    total = list(coeffs)
    for n in range(1, M + 1):
        coeffs = [c * x for c in coeffs]
        _divide_by_binomial(coeffs, n)
        if n < M:
            total = [t + c for t, c in zip(total, coeffs)]
    tail = 1 / (1 - x)
    if M == 0:
        return TruncatedSeries([c * tail for c in total])
    return TruncatedSeries(t + c * tail for t, c in zip(total, coeffs))


# -- wire format --------------------------------------------------------


def _coeff_to_json(c):
    if isinstance(c, CyclotomicNumber):
        return [str(r) for r in c.residue]
    return str(c)


def to_json(s: TruncatedSeries) -> list:
    """Coefficients lowest degree first: "p/q" strings, or lists of them for Q(zeta_N)."""
    return [_coeff_to_json(c) for c in s.coeffs]


def from_json(data: Sequence, cyclotomic_order: int | None = None) -> TruncatedSeries:
    out = []
    for c in data:
        if isinstance(c, list):
            if cyclotomic_order is None:
                raise ValueError("cyclotomic residues need the field order")
            out.append(CyclotomicNumber(cyclotomic_order, [Fraction(r) for r in c]))
        else:
            out.append(Fraction(c))
    return TruncatedSeries(out)
