"""The catalog of identity checks run by ``qacs all`` and the acceptance suite.

A catalog entry is a plain ``(case_id, kind, params, expect_match)`` tuple so it
can be shipped to worker processes; :func:`run_entry` rebuilds and verifies it.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from ..exact import rational_part
from ..series import TruncatedSeries, euler_sum, pochhammer_infinite
from .basis import BasisVerificationError, NoSolutionError, candidate_monomials, express_in_divisor_basis
from .closed_forms import (
    a_at_q_iterated,
    rhs_ceiling_form,
    rhs_exponential_case,
    rhs_periodic_case,
    rhs_polynomial_case,
)
from .lemmas import (
    alternating_expressions,
    q_gauss_limit,
    rootid_check,
    s0_forms,
    triangular_expressions,
)
from .recurrence import Exponential, Periodic, Polynomial, limit_series
from .verify import LimitIdentityCase, Mismatch, VerificationReport, verify_case

__all__ = [
    "Entry",
    "POLYNOMIAL_GRID",
    "EXPONENTIAL_GRID",
    "QGAUSS_PAIRS",
    "EULER_ARGUMENTS",
    "periodic_grid",
    "catalog",
    "run_entry",
    "build_case",
]

POLYNOMIAL_GRID = ((1,), (0, 1), (0, 0, 1), (0, 0, 0, 1), (2, -3, 5))
EXPONENTIAL_GRID = (Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(-3, 5), Fraction(7))
QGAUSS_PAIRS = (
    (Fraction(1, 2), Fraction(1, 3)),
    (Fraction(-1), Fraction(1, 3)),
    (Fraction(-1), Fraction(5, 7)),
    (Fraction(2), Fraction(3)),
    (Fraction(3), Fraction(3)),
    (Fraction(1, 2), Fraction(1, 2)),
    (Fraction(-2, 3), Fraction(4)),
    (Fraction(5), Fraction(-1, 5)),
    (Fraction(1), Fraction(2)),
    (Fraction(7, 3), Fraction(-3, 7)),
)
# "q" and "-q" stand for the series arguments
EULER_ARGUMENTS = ("q", "-q", Fraction(0), Fraction(1, 2), Fraction(-1), Fraction(5), Fraction(-7, 3))
ROOTID_MAX_N = 12
BASIS_JS = (1, 2, 3)


class Entry(NamedTuple):
    case_id: str
    kind: str
    params: tuple
    expect_match: bool = True


def periodic_grid(per_period: int = 5, seed: int = 20240601) -> list[tuple[Fraction, ...]]:
    """f = (-1, 1) plus ``per_period`` seeded random integer periods for N in {1, 2, 3, 4, 6}."""
    rng = random.Random(seed)
    grid = [(Fraction(-1), Fraction(1))]
    for N in (1, 2, 3, 4, 6):
        for _ in range(per_period):
            grid.append(tuple(Fraction(rng.randint(-9, 9)) for _ in range(N)))
    return grid


def _fmt(values) -> str:
    return ",".join(str(v) for v in values)


def catalog() -> list[Entry]:
    entries: list[Entry] = []
    for c in POLYNOMIAL_GRID:
        entries.append(Entry(f"thm-poly[{_fmt(c)}] rhs=limit", "poly", (c,)))
    for b in EXPONENTIAL_GRID:
        entries.append(Entry(f"thm-exp[b={b}] rhs=limit", "exp", (b,)))
        entries.append(Entry(f"thm-exp[b={b}] iterated=limit", "exp-iterated", (b,)))
    entries.append(Entry("thm-exp[b=-1] limit=-q+q^4-q^9+q^16 (order 16)", "exp-theta", ()))
    for values in periodic_grid():
        tag = _fmt(values)
        entries.append(Entry(f"thm-periodic[{tag}] rhs=limit", "periodic", (values,)))
        entries.append(Entry(f"thm-periodic[{tag}] ceiling=limit", "ceiling", (values,)))
        entries.append(Entry(f"thm-periodic[{tag}] iterated=limit", "periodic-iterated", (values,)))
    for name in ("theta", "odd_pochhammer_sum", "half_product", "periodic_case",
                 "ceiling_form", "exponential_case"):
        entries.append(Entry(f"cor-alt limit={name}", "cor-alt", (name,)))
    entries.append(Entry("cor-alt limit=half_product_printed (printed sign, expected mismatch)",
                         "cor-alt", ("half_product_printed",), False))
    for name in ("limit_a_n", "limit_via_beta", "exponential_case", "theta"):
        entries.append(Entry(f"cor-theta product={name}", "cor-theta", (name,)))
    entries.append(Entry("cor-theta product=theta_from_n1 (sum from n=1, expected mismatch)",
                         "cor-theta", ("theta_from_n1",), False))
    for x in EULER_ARGUMENTS:
        entries.append(Entry(f"lemma-euler[x={x}] sum*(x;q)_inf=1", "lemma-euler", (x,)))
    for name in ("pochhammer_weighted", "alternating_triangular"):
        entries.append(Entry(f"lemma-s0 {name}=divisor_sum", "lemma-s0", (name,)))
    for b, c in QGAUSS_PAIRS:
        entries.append(Entry(f"lemma-qgauss[b={b},c={c}] lhs=rhs", "lemma-qgauss", (b, c)))
    for N in range(1, ROOTID_MAX_N + 1):
        entries.append(Entry(f"lemma-rootid[N={N}] -N<j<=2N", "lemma-rootid", (N,)))
    for j in BASIS_JS:
        entries.append(Entry(f"basis[j={j}] T_j in S_0..S_{j}", "basis", (j,)))
    return entries


@lru_cache(maxsize=None)
def _limit(spec, M):
    return limit_series(spec, M)


@lru_cache(maxsize=4)
def _alternating(M):
    return alternating_expressions(M)


@lru_cache(maxsize=4)
def _triangular(M):
    return triangular_expressions(M)


@lru_cache(maxsize=4)
def _s0(M):
    return s0_forms(M)


def _euler_arg(x, M):
    if x == "q":
        return TruncatedSeries.q(M)
    if x == "-q":
        return -TruncatedSeries.q(M)
    return x


def _alternating_squares_16():
    coeffs = [0] * 17
    for j in range(1, 5):
        coeffs[j * j] = (-1) ** j
    return TruncatedSeries(coeffs)


def build_case(entry: Entry, M: int) -> LimitIdentityCase:
    """The series comparison behind a catalog entry (every kind except rootid and basis)."""
    kind, p = entry.kind, entry.params
    one = TruncatedSeries.one(M)
    if kind == "poly":
        lhs, rhs = (lambda: rhs_polynomial_case(p[0], M)), (lambda: _limit(Polynomial(p[0]), M))
    elif kind == "exp":
        lhs, rhs = (lambda: rhs_exponential_case(p[0], M)), (lambda: _limit(Exponential(p[0]), M))
    elif kind == "exp-iterated":
        lhs, rhs = (lambda: a_at_q_iterated(Exponential(p[0]), M)), (lambda: _limit(Exponential(p[0]), M))
    elif kind == "exp-theta":
        return LimitIdentityCase(entry.case_id, 16, lambda: limit_series(Exponential(-1), 16),
                                 _alternating_squares_16(), expect_match=entry.expect_match)
    elif kind == "periodic":
        lhs, rhs = (lambda: rhs_periodic_case(p[0], M)), (lambda: _limit(Periodic(p[0]), M))
    elif kind == "ceiling":
        lhs, rhs = (lambda: rhs_ceiling_form(p[0], M)), (lambda: _limit(Periodic(p[0]), M))
    elif kind == "periodic-iterated":
        lhs, rhs = (lambda: a_at_q_iterated(Periodic(p[0]), M)), (lambda: _limit(Periodic(p[0]), M))
    elif kind == "cor-alt":
        lhs, rhs = (lambda: _alternating(M)["limit"]), (lambda: _alternating(M)[p[0]])
    elif kind == "cor-theta":
        lhs, rhs = (lambda: _triangular(M)["product"]), (lambda: _triangular(M)[p[0]])
    elif kind == "lemma-euler":
        x = _euler_arg(p[0], M)
        lhs = lambda: euler_sum(x, M) * pochhammer_infinite(x, M)  # noqa: E731
        rhs = one
    elif kind == "lemma-s0":
        lhs, rhs = (lambda: _s0(M)[p[0]]), (lambda: _s0(M)["divisor_sum"])
    elif kind == "lemma-qgauss":
        pair = {}

        def lhs():
            pair["both"] = q_gauss_limit(p[0], p[1], M)
            return pair["both"][0]

        def rhs():
            return pair["both"][1]
    else:
        raise ValueError(f"no series comparison for catalog kind {kind!r}")
    return LimitIdentityCase(entry.case_id, M, lhs, rhs, expect_match=entry.expect_match)


def _run_rootid(entry: Entry) -> VerificationReport:
    N = entry.params[0]
    js = entry.params[1:] or range(-N + 1, 2 * N + 1)
    start = time.perf_counter()
    miss = None
    for j in js:
        in_field, closed = rootid_check(N, j)
        if not in_field.is_rational() or rational_part(in_field) != closed:
            miss = Mismatch(j, str(in_field), str(closed))
            break
    millis = int((time.perf_counter() - start) * 1000)
    # the mismatch "power" slot carries the offending j
    return VerificationReport(entry.case_id, 0, miss is None, miss, millis, entry.expect_match)


def _run_basis(entry: Entry, M: int) -> VerificationReport:
    j = entry.params[0]
    fit = max(len(candidate_monomials(j)), 20)
    check = max(2 * M, fit + 1)
    start = time.perf_counter()
    miss, note = None, ""
    try:
        poly = express_in_divisor_basis(j, fit, check)
        note = str(poly)
        if j == 1 and note != "S_0":
            miss = Mismatch(0, note, "S_0")
    except NoSolutionError as exc:
        miss = Mismatch(fit, f"T_{j}", "no solution")
        note = str(exc)
    except BasisVerificationError as exc:
        miss = Mismatch(exc.power, f"T_{j}", str(exc.polynomial))
        note = str(exc)
    millis = int((time.perf_counter() - start) * 1000)
    return VerificationReport(entry.case_id, check, miss is None, miss, millis,
                              entry.expect_match, note=note)


def run_entry(entry: Entry, M: int) -> VerificationReport:
    if entry.kind == "lemma-rootid":
        return _run_rootid(entry)
    if entry.kind == "basis":
        return _run_basis(entry, M)
    return verify_case(build_case(entry, M))
