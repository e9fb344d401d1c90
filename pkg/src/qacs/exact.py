"""Exact coefficient rings: the rationals and the cyclotomic fields Q(zeta_N).

Rationals are :class:`fractions.Fraction`.  An element of Q(zeta_N) is stored as
its residue modulo the N-th cyclotomic polynomial, a tuple of ``phi(N)``
fractions with the constant coefficient first.  Because residues are always
fully reduced, two elements are equal exactly when their residues are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC

Rational = Fraction

__all__ = [
    "Rational",
    "CyclotomicPolynomial",
    "CyclotomicNumber",
    "NonRationalError",
    "cyclotomic_polynomial",
    "zeta_power",
    "cyc_invert",
    "rational_part",
    "as_rational",
]


class NonRationalError(ArithmeticError):
    """A cyclotomic number expected to be rational has irrational residue entries."""


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


# -- dense polynomials over Q, lists with the constant term first ----------


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _poly_sub(a, b) -> list:
    n = max(len(a), len(b))
    out = [
        (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)
    ]
    return _trim([Fraction(c) for c in out])


def _poly_divmod(a, b) -> tuple[list, list]:
    """Long division a = q*b + r over Q; b must be nonzero."""
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in a]
    _trim(r)
    if len(r) < len(b):
        return [], r
    q = [Fraction(0)] * (len(r) - len(b) + 1)
    lead = b[-1]
    while len(r) >= len(b):
        shift = len(r) - len(b)
        coef = r[-1] / lead
        q[shift] = coef
        for i, c in enumerate(b):
            r[shift + i] -= coef * c
        r.pop()
        _trim(r)
    return _trim(q), r


@dataclass(frozen=True)
class CyclotomicPolynomial:
    """The monic minimal polynomial of a primitive N-th root of unity."""

    order: int
    coefficients: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N: int) -> CyclotomicPolynomial:
    """Phi_N as the exact quotient of x^N - 1 by Phi_d over the proper divisors d."""
    if N < 1:
        raise ValueError(f"cyclotomic order must be positive, got {N}")
    num = [Fraction(-1)] + [Fraction(0)] * (N - 1) + [Fraction(1)]
    den = [Fraction(1)]
    for d in range(1, N):
        if N % d == 0:
            den = _poly_mul(den, cyclotomic_polynomial(d).coefficients)
    quot, rem = _poly_divmod(num, den)
    if rem:
        raise ArithmeticError(f"x^{N} - 1 not divisible by lower cyclotomic factors")
    return CyclotomicPolynomial(N, tuple(quot))


def _reduce(poly: list, N: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(N).coefficients
    deg = len(phi) - 1
    r = list(poly)
    # phi is monic, so each step just cancels the leading term
    for top in range(len(r) - 1, deg - 1, -1):
        c = r[top]
        if c == 0:
            continue
        base = top - deg
        for i in range(deg):
            if phi[i]:
                r[base + i] -= c * phi[i]
        r[top] = Fraction(0)
    r = r[:deg] + [Fraction(0)] * (deg - len(r))
    return tuple(r)


class CyclotomicNumber:
    """An element of Q(zeta_N), immutable.

    Arithmetic accepts ints and Fractions on either side; they are embedded as
    constant residues.  Combining elements of different orders is an error.
    """

    __slots__ = ("order", "residue")

    def __init__(self, order: int, residue):
        phi = cyclotomic_polynomial(order).degree
        residue = tuple(as_rational(c) for c in residue)
        if len(residue) != phi:
            residue = _reduce(list(residue), order)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "residue", residue)

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicNumber is immutable")

    @classmethod
    def embed(cls, order: int, value) -> "CyclotomicNumber":
        phi = cyclotomic_polynomial(order).degree
        return cls(order, (as_rational(value),) + (Fraction(0),) * (phi - 1))

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise ValueError(
                    f"cannot combine elements of Q(zeta_{self.order}) and Q(zeta_{other.order})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.embed(self.order, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicNumber(
            self.order, tuple(a + b for a, b in zip(self.residue, other.residue))
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, tuple(-a for a in self.residue))

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicNumber(
            self.order, tuple(a - b for a, b in zip(self.residue, other.residue))
        )

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.order, tuple(a * other for a in self.residue))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicNumber(
            self.order, _reduce(_poly_mul(self.residue, other.residue), self.order)
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(zeta_N)")
            return CyclotomicNumber(self.order, tuple(a / other for a in self.residue))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * cyc_invert(other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * cyc_invert(self)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else cyc_invert(self)
        k = abs(k)
        result = CyclotomicNumber.embed(self.order, 1)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.residue == other.residue

    def __hash__(self):
        if self.is_rational():
            return hash(self.residue[0])
        return hash((self.order, self.residue))

    def __bool__(self):
        return any(self.residue)

    def is_rational(self) -> bool:
        return not any(self.residue[1:])

    def __repr__(self):
        return f"CyclotomicNumber({self.order}, {[str(c) for c in self.residue]})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.residue):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                z = "z" if k == 1 else f"z^{k}"
                parts.append(z if c == 1 else f"{c}*{z}")
        return " + ".join(parts) if parts else "0"


@lru_cache(maxsize=None)
def zeta_power(N: int, k: int) -> CyclotomicNumber:
    """zeta_N**k, with k first reduced mod N."""
    if N < 1:
        raise ValueError(f"cyclotomic order must be positive, got {N}")
    k %= N
    mono = [Fraction(0)] * k + [Fraction(1)]
    return CyclotomicNumber(N, _reduce(mono, N))


def cyc_invert(a: CyclotomicNumber) -> CyclotomicNumber:
    """Multiplicative inverse via the extended Euclidean algorithm against Phi_N."""
    if not a:
        raise ZeroDivisionError("zero has no inverse in Q(zeta_N)")
    phi = list(cyclotomic_polynomial(a.order).coefficients)
    # invariant: r0 = s0*a (mod phi), r1 = s1*a (mod phi)
    r0, s0 = phi, []
    r1, s1 = _trim(list(a.residue)), [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if not r1:
        # only possible if phi were reducible
        raise ArithmeticError("residue shares a factor with the cyclotomic modulus")
    inv = [c / r1[0] for c in s1]
    return CyclotomicNumber(a.order, _reduce(inv, a.order))


def rational_part(a) -> Fraction:
    """The rational value of ``a``; raises NonRationalError if it is not rational."""
    if isinstance(a, (int, Fraction)):
        return Fraction(a)
    if not a.is_rational():
        raise NonRationalError(f"{a} in Q(zeta_{a.order}) is not rational")
    return a.residue[0]
