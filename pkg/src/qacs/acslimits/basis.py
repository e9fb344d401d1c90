"""Find T_j(q) as a polynomial in S_0(q), ..., S_j(q) by exact linear algebra."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from ..numbertheory import s_k_series
from ..series import TruncatedSeries
from .closed_forms import t_j_series

__all__ = [
    "BasisError",
    "NoSolutionError",
    "BasisVerificationError",
    "DivisorPolynomial",
    "candidate_monomials",
    "solve_rational",
    "express_in_divisor_basis",
]


class BasisError(ArithmeticError):
    pass


class NoSolutionError(BasisError):
    """The fitted linear system is inconsistent."""


class BasisVerificationError(BasisError):
    """A fit was found but disagrees with T_j at a higher order."""

    def __init__(self, polynomial, power, expected, got):
        super().__init__(
            f"fitted {polynomial} disagrees with T_j at q^{power}: {expected} vs {got}"
        )
        self.polynomial = polynomial
        self.power = power


def _weight(exps) -> int:
    return sum(e * (i + 1) for i, e in enumerate(exps))


def candidate_monomials(j: int) -> list[tuple[int, ...]]:
    """Exponent vectors (e_0, ..., e_j) with sum e_i (i+1) <= j + 1, S_i having weight i + 1.

    Ordered by weight, then lexicographically; the empty product (the constant 1) comes first.
    """
    out = []

    def rec(i, prefix, budget):
        if i > j:
            out.append(tuple(prefix))
            return
        w = i + 1
        for e in range(budget // w + 1):
            rec(i + 1, prefix + [e], budget - e * w)

    rec(0, [], j + 1)
    return sorted(out, key=lambda e: (_weight(e), e))


def _monomial_str(exps) -> str:
    factors = []
    for i, e in enumerate(exps):
        if e == 1:
            factors.append(f"S_{i}")
        elif e > 1:
            factors.append(f"S_{i}^{e}")
    return "*".join(factors)


@dataclass(frozen=True)
class DivisorPolynomial:
    """sum of coefficient * prod_i S_i^(e_i) over the stored terms."""

    terms: tuple[tuple[tuple[int, ...], Fraction], ...]

    def evaluate(self, M: int) -> TruncatedSeries:
        width = max((len(e) for e, _ in self.terms), default=0)
        s = [s_k_series(i, M) for i in range(width)]
        total = TruncatedSeries.zero(M)
        for exps, coef in self.terms:
            total = total + coef * _monomial_series(exps, s, M)
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, coef in self.terms:
            mono = _monomial_str(exps)
            if not mono:
                parts.append(str(coef))
            elif coef == 1:
                parts.append(mono)
            elif coef == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{coef}*{mono}")
        text = parts[0]
        for p in parts[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text


def _monomial_series(exps, s, M) -> TruncatedSeries:
    acc = TruncatedSeries.one(M)
    for i, e in enumerate(exps):
        if e:
            acc = acc * s[i] ** e
    return acc


def solve_rational(rows: list[list[Fraction]], rhs: list[Fraction]):
    """Gauss-Jordan over Q.  Returns (solution with free variables 0, rank), or None if inconsistent."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    aug = [list(map(Fraction, r)) + [Fraction(v)] for r, v in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if aug[i][col]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        lead = aug[r][col]
        aug[r] = [x / lead for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    if any(row[n] for row in aug[r:]):
        return None
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = aug[i][n]
    return x, len(pivots)


def express_in_divisor_basis(j: int, M_fit: int, M_check: int) -> DivisorPolynomial:
    """Fit T_j against divisor-sum monomials up to q^M_fit, then re-verify up to q^M_check.

    When the fit is underdetermined the solution with the fewest nonzero
    monomials wins, ties going to the earliest monomials in candidate order.
    """
    if j < 1:
        raise ValueError(f"j must be positive, got {j}")
    monomials = candidate_monomials(j)
    if not M_check > M_fit >= len(monomials):
        raise ValueError(
            f"need M_check > M_fit >= {len(monomials)} (the number of candidate monomials); "
            f"got M_fit={M_fit}, M_check={M_check}"
        )
    s = [s_k_series(i, M_check) for i in range(j + 1)]
    columns = [_monomial_series(e, s, M_check) for e in monomials]
    target = t_j_series(j, M_check)

    rows = [[col[m] for col in columns] for m in range(M_fit + 1)]
    rhs = [target[m] for m in range(M_fit + 1)]
    solved = solve_rational(rows, rhs)
    if solved is None:
        raise NoSolutionError(
            f"T_{j} is not a combination of the {len(monomials)} candidate monomials "
            f"through q^{M_fit}"
        )
    x, rank = solved
    if rank < len(monomials):
        x = _sparsest(rows, rhs, len(monomials), rank)

    poly = DivisorPolynomial(tuple((e, c) for e, c in zip(monomials, x) if c))
    combined = TruncatedSeries.zero(M_check)
    for c, col in zip(x, columns):
        if c:
            combined = combined + c * col
    for m in range(M_check + 1):
        if combined[m] != target[m]:
            raise BasisVerificationError(poly, m, target[m], combined[m])
    return poly


def _sparsest(rows, rhs, n, rank):
    for size in range(0, rank + 1):
        for support in combinations(range(n), size):
            sub = [[row[i] for i in support] for row in rows]
            if not support:
                if not any(rhs):
                    return [Fraction(0)] * n
                continue
            solved = solve_rational(sub, rhs)
            if solved is None:
                continue
            y, _ = solved
            if all(y):
                x = [Fraction(0)] * n
                for i, v in zip(support, y):
                    x[i] = v
                return x
    raise AssertionError("a consistent system always has a solution on some pivot set")
