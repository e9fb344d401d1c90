import random
from itertools import product
from math import gcd

import pytest

from qacs.numbertheory import (
    divisor_table,
    s_k_series,
    sigma,
    stirling2,
    theta_alternating_squares,
    theta_triangular,
)
from qacs.series import TruncatedSeries, invert_unit, pochhammer_infinite, pochhammer_infinite_series_arg, substitute_power


def set_partitions(k, l):
    """Count surjections {1..k} -> {1..l} up to relabelling of blocks."""
    if l == 0:
        return 1 if k == 0 else 0
    count = 0
    for labels in product(range(l), repeat=k):
        # canonical labelling: first occurrences appear in order 0, 1, 2, ...
        seen = []
        for x in labels:
            if x not in seen:
                seen.append(x)
        if len(seen) == l and seen == list(range(l)):
            count += 1
    return count


def test_sigma_examples():
    assert sigma(0, 1) == 1
    assert sigma(1, 6) == 12
    assert sigma(2, 4) == 21


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 97])
@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_sigma_primes(p, k):
    assert sigma(k, p) == 1 + p**k


def test_sigma_multiplicative():
    rng = random.Random(7)
    checked = 0
    while checked < 50:
        m, n = rng.randint(1, 300), rng.randint(1, 300)
        if gcd(m, n) != 1:
            continue
        for k in range(4):
            assert sigma(k, m * n) == sigma(k, m) * sigma(k, n)
        checked += 1


def test_divisor_table_matches_enumeration():
    table = divisor_table(200, [0, 1, 2])
    for k in (0, 1, 2):
        for n in range(1, 201):
            assert table[k][n] == sum(d**k for d in range(1, n + 1) if n % d == 0)


def test_s_k_series_examples():
    assert list(s_k_series(0, 4)) == [0, 1, 2, 2, 3]
    assert list(s_k_series(1, 4)) == [0, 1, 3, 4, 7]
    assert s_k_series(3, 0) == TruncatedSeries.zero(0)


def test_stirling_examples():
    for k in range(11):
        assert stirling2(k, k) == 1
    assert stirling2(3, 2) == 3
    assert stirling2(4, 2) == 7
    assert stirling2(5, 0) == 0
    assert stirling2(2, 5) == 0


@pytest.mark.parametrize("k", range(0, 7))
def test_stirling_by_enumeration(k):
    for l in range(0, k + 1):
        assert stirling2(k, l) == set_partitions(k, l)


def falling(n, l):
    out = 1
    for i in range(l):
        out *= n - i
    return out


def test_stirling_falling_factorial_identity():
    for n in range(9):
        for k in range(9):
            assert n**k == sum(stirling2(k, l) * falling(n, l) for l in range(k + 1))


def test_theta_examples():
    assert list(theta_alternating_squares(4)) == [1, -2, 0, 0, 2]
    assert theta_alternating_squares(0) == TruncatedSeries.one(0)
    assert list(theta_triangular(6)) == [1, 1, 0, 1, 0, 0, 1]
    assert theta_triangular(0) == TruncatedSeries.one(0)


def test_theta_alternating_product():
    M = 40
    q = TruncatedSeries.q(M)
    ratio = pochhammer_infinite(q, M) * invert_unit(pochhammer_infinite(-q, M))
    assert theta_alternating_squares(M) == ratio


def test_theta_triangular_product():
    M = 40
    q = TruncatedSeries.q(M)
    q2q2 = substitute_power(pochhammer_infinite(q, M), 2)
    ratio = q2q2 * invert_unit(pochhammer_infinite_series_arg(q, M, base=2))
    assert theta_triangular(M) == ratio
    # the n >= 1 normalization misses the constant term
    assert (theta_triangular(M) - 1)[0] != ratio[0]
