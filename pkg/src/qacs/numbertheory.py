"""Divisor sums, Stirling numbers and the two theta series used by the corollaries."""

from __future__ import annotations

from functools import lru_cache
from math import isqrt

from .series import TruncatedSeries

__all__ = [
    "divisors",
    "sigma",
    "divisor_table",
    "s_k_series",
    "stirling2",
    "theta_alternating_squares",
    "theta_triangular",
]


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError(f"divisors are defined for positive n, got {n}")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def sigma(k: int, n: int) -> int:
    """Sum of the k-th powers of the positive divisors of n."""
    if k < 0:
        raise ValueError(f"sigma needs k >= 0, got {k}")
    return sum(d**k for d in divisors(n))


def divisor_table(max_n: int, ks) -> dict[int, list[int]]:
    """sigma_k(n) for every k in ``ks`` and 1 <= n <= max_n, filled by a sieve.

    ``table[k][n]`` holds sigma_k(n); index 0 is an unused 0.
    """
    table = {}
    for k in ks:
        row = [0] * (max_n + 1)
        for d in range(1, max_n + 1):
            dk = d**k
            for m in range(d, max_n + 1, d):
                row[m] += dk
        table[k] = row
    return table


def s_k_series(k: int, M: int) -> TruncatedSeries:
    """S_k(q) = sum_{n>=1} sigma_k(n) q^n, truncated at order M."""
    if M == 0:
        return TruncatedSeries.zero(0)
    row = divisor_table(M, [k])[k]
    return TruncatedSeries(row)


@lru_cache(maxsize=None)
def stirling2(k: int, l: int) -> int:
    """Stirling number of the second kind S(k, l)."""
    if k < 0 or l < 0:
        raise ValueError("Stirling numbers need non-negative arguments")
    if k == 0 and l == 0:
        return 1
    if k == 0 or l == 0 or l > k:
        return 0
    return l * stirling2(k - 1, l) + stirling2(k - 1, l - 1)


def theta_alternating_squares(M: int) -> TruncatedSeries:
    """sum over all integers n of (-1)^n q^(n^2)."""
    coeffs = [0] * (M + 1)
    coeffs[0] = 1
    n = 1
    while n * n <= M:
        coeffs[n * n] = 2 * (-1) ** n
        n += 1
    return TruncatedSeries(coeffs)


def theta_triangular(M: int) -> TruncatedSeries:
    """sum_{n>=0} q^(n(n+1)/2); the n = 0 term supplies the constant 1."""
    coeffs = [0] * (M + 1)
    n = 0
    while n * (n + 1) // 2 <= M:
        coeffs[n * (n + 1) // 2] = 1
        n += 1
    return TruncatedSeries(coeffs)
