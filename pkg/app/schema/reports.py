"""
Output schemas for the command-line reports.

Every numeric value is carried as a decimal string so JSON output never loses
precision, whatever the size of the integer.
"""

from typing import Literal, Optional

from pydantic import BaseModel, Field

from app.core.bench import BenchRecord
from kfib.exact import Mat2
from kfib.identities import Failure, IdentityReport
from kfib.sums import ErratumFinding, SumResult


class ComputeReport(BaseModel):
    """Schema for `compute` output."""
    k: str
    n: str
    kind: Literal["fibonacci", "lucas"]
    value: str


class SumReport(BaseModel):
    """Schema for `sum` output. `naive` and `match` are only set by --method both."""
    k: str
    a: str
    n: str
    kind: str
    method: str
    value: str
    denominator: str
    naive: Optional[str] = None
    match: Optional[bool] = None

    @classmethod
    def from_result(cls, result: SumResult, method: Optional[str] = None) -> "SumReport":
        return cls(
            k=str(result.params.k),
            a=str(result.params.a),
            n=str(result.n),
            kind=result.kind.value,
            method=method or result.method.value,
            value=str(result.value),
            denominator=str(result.denominator),
        )


class MatpowReport(BaseModel):
    """Schema for `matpow` output; entries render half-integers as p/2."""
    k: str
    a: str
    n: str
    matrix: Literal["r", "s"]
    entries: list[list[str]]
    consistent: bool

    @staticmethod
    def render_entries(m: Mat2) -> list[list[str]]:
        return [[str(v) for v in row] for row in m.entries()]


class FailureRow(BaseModel):
    k: str
    a: str
    n: str
    m: str
    lhs: str
    rhs: str

    @classmethod
    def from_failure(cls, f: Failure) -> "FailureRow":
        return cls(k=str(f.k), a=str(f.a), n=str(f.n), m=str(f.m), lhs=f.lhs, rhs=f.rhs)


class VerifyReport(BaseModel):
    """Schema for a single identity suite. `holds_at_zero` is omitted when the grid starts above n = 0."""
    identity: str
    checked: str
    holds_at_zero: Optional[bool] = None
    failures: list[FailureRow] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report: IdentityReport) -> "VerifyReport":
        return cls(
            identity=report.identity.value,
            checked=str(report.checked),
            holds_at_zero=report.holds_at_zero,
            failures=[FailureRow.from_failure(f) for f in report.failures],
        )


class ErratumRow(BaseModel):
    k: str
    a: str
    n: str
    oracle: str
    statement: Optional[str] = None
    outcome: str

    @classmethod
    def from_finding(cls, f: ErratumFinding) -> "ErratumRow":
        return cls(
            k=str(f.k),
            a=str(f.a),
            n=str(f.n),
            oracle=str(f.oracle),
            statement=None if f.statement is None else str(f.statement),
            outcome=f.outcome,
        )


class VerifyAllReport(BaseModel):
    """Schema for `verify --identity all`: every suite plus the parity audit."""
    suites: list[VerifyReport]
    erratum: list[ErratumRow]


class BenchRow(BaseModel):
    strategy: str
    k: str
    n: str
    millis: str
    mults: str
    digits: str

    @classmethod
    def from_record(cls, r: BenchRecord) -> "BenchRow":
        return cls(
            strategy=r.strategy,
            k=str(r.k),
            n=str(r.n),
            millis=f"{r.millis:.3f}",
            mults=str(r.mults),
            digits=str(r.digits),
        )


class BenchReport(BaseModel):
    """Schema for `bench` output."""
    records: list[BenchRow]
