"""Exact coefficientwise comparison of two series and the report it produces."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Union

from ..series import TruncatedSeries

__all__ = ["Mismatch", "VerificationReport", "LimitIdentityCase", "first_mismatch", "verify_case"]


@dataclass(frozen=True)
class Mismatch:
    power: int
    lhs: str
    rhs: str


@dataclass
class VerificationReport:
    case: str
    order: int
    match: bool
    mismatch: Mismatch | None = None
    millis: int = 0
    expect_match: bool = True
    note: str = ""

    def __post_init__(self):
        if self.match != (self.mismatch is None):
            raise ValueError("a report matches exactly when it has no mismatch")

    @property
    def passed(self) -> bool:
        """True when the outcome is the expected one (including documented errata)."""
        return self.match == self.expect_match

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "order": self.order,
            "match": self.match,
            "mismatch": None
            if self.mismatch is None
            else {
                "power": self.mismatch.power,
                "lhs": self.mismatch.lhs,
                "rhs": self.mismatch.rhs,
            },
            "millis": self.millis,
        }


SeriesLike = Union[TruncatedSeries, Callable[[], TruncatedSeries]]


@dataclass
class LimitIdentityCase:
    """Two expressions claimed equal modulo q^(order+1).

    ``lhs`` and ``rhs`` may be given as series or as zero-argument callables;
    callables are evaluated inside :func:`verify_case` so their cost is timed.
    """

    case_id: str
    order: int
    lhs: SeriesLike
    rhs: SeriesLike
    lhs_description: str = "lhs"
    rhs_description: str = "rhs"
    expect_match: bool = True
    note: str = field(default="")


def first_mismatch(lhs: TruncatedSeries, rhs: TruncatedSeries, order: int) -> Mismatch | None:
    if lhs.order < order or rhs.order < order:
        raise ValueError(
            f"cannot compare to order {order}: operands known to orders {lhs.order}, {rhs.order}"
        )
    for m in range(order + 1):
        if lhs[m] != rhs[m]:
            return Mismatch(m, str(lhs[m]), str(rhs[m]))
    return None


def verify_case(case: LimitIdentityCase) -> VerificationReport:
    start = time.perf_counter()
    lhs = case.lhs() if callable(case.lhs) else case.lhs
    rhs = case.rhs() if callable(case.rhs) else case.rhs
    miss = first_mismatch(lhs, rhs, case.order)
    millis = int((time.perf_counter() - start) * 1000)
    return VerificationReport(
        case=case.case_id,
        order=case.order,
        match=miss is None,
        mismatch=miss,
        millis=millis,
        expect_match=case.expect_match,
        note=case.note,
    )
