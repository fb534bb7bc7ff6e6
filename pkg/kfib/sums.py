"""
Sums of k-Fibonacci numbers at arithmetic indexes.

    sum_{i=0}^{n} F_{k,ai}          = ((-1)^a F_{k,an} + F_{k,a} - F_{k,a(n+1)}) / delta
    sum_{i=0}^{n} (-1)^i F_{k,ai}   = ((-1)^a F_{k,an} - F_{k,a} + F_{k,a(n+1)}) / delta'   (n even)

with delta = 1 + (-1)^a - L_{k,a} = det(I - S_a) and
delta' = 1 + (-1)^a + L_{k,a} = det(I + S_a). The alternating formula only
holds for even n; odd n is the even value at n - 1 minus F_{k,an}.
alt_sum_literal evaluates the alternating formula at every parity so the
odd-n disagreement can be reported.
"""

import logging
from enum import Enum
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict

from kfib.closed_forms import s_matrix
from kfib.errors import InexactDivision
from kfib.exact import (
    Mat2,
    Params,
    adjugate,
    checked_div,
    mat_mul,
    mat_neg,
    mat_pow,
    mat_sub,
    neg_one_pow,
)
from kfib.sequences import fib, lucas

logger = logging.getLogger(__name__)


class SumKind(str, Enum):
    PLAIN = "plain"
    ALTERNATING = "alternating"


class SumMethod(str, Enum):
    CLOSED = "closed"
    NAIVE = "naive"
    MATRIX = "matrix"


class SumResult(BaseModel):
    """A sum value together with how it was obtained."""

    model_config = ConfigDict(frozen=True)

    params: Params
    n: int
    kind: SumKind
    value: int
    method: SumMethod
    denominator: int


class ErratumFinding(BaseModel):
    """Literal alternating formula versus the oracle at one odd n."""

    model_config = ConfigDict(frozen=True)

    k: int
    a: int
    n: int
    oracle: int
    statement: Optional[int] = None
    outcome: Literal["agrees", "mismatch", "inexact"]


def _check_index(n: int) -> None:
    if n < 0:
        raise ValueError(f"sum upper index must be non-negative, got {n}")


def sum_denominator(p: Params, kind: SumKind) -> int:
    """delta for plain sums, delta' for alternating sums; never zero for a >= 1."""
    sign = 1 if kind is SumKind.PLAIN else -1
    d = 1 + neg_one_pow(p.a) - sign * lucas(p.k, p.a)
    if d == 0:
        raise ZeroDivisionError(f"sum denominator vanished for {p}")
    return d


def sum_denominator_from_matrix(p: Params, kind: SumKind) -> int:
    """det(I - S_a) for plain sums, det(I + S_a) for alternating sums."""
    s = s_matrix(p)
    m = s if kind is SumKind.PLAIN else mat_neg(s)
    det = mat_sub(Mat2.identity(), m).det()
    if det.denominator != 1:
        raise InexactDivision(det.numerator, det.denominator)
    return det.numerator


def sum_arith_naive(p: Params, n: int) -> int:
    _check_index(n)
    return sum(fib(p.k, p.a * i) for i in range(n + 1))


def alt_sum_arith_naive(p: Params, n: int) -> int:
    _check_index(n)
    return sum(neg_one_pow(i) * fib(p.k, p.a * i) for i in range(n + 1))


def sum_arith_closed(p: Params, n: int) -> SumResult:
    _check_index(n)
    k, a = p.k, p.a
    d = sum_denominator(p, SumKind.PLAIN)
    num = neg_one_pow(a) * fib(k, a * n) + fib(k, a) - fib(k, a * (n + 1))
    return SumResult(
        params=p,
        n=n,
        kind=SumKind.PLAIN,
        value=checked_div(num, d),
        method=SumMethod.CLOSED,
        denominator=d,
    )


def alt_sum_literal(p: Params, n: int) -> int:
    """
    The alternating closed formula evaluated at n whatever its parity.

    Correct for even n. For odd n it may disagree with the oracle or raise
    InexactDivision (k=1, a=2, n=3 gives 28/5).
    """
    _check_index(n)
    k, a = p.k, p.a
    num = neg_one_pow(a) * fib(k, a * n) - fib(k, a) + fib(k, a * (n + 1))
    return checked_div(num, sum_denominator(p, SumKind.ALTERNATING))


def alt_sum_arith_closed(p: Params, n: int) -> SumResult:
    _check_index(n)
    if n % 2 == 0:
        value = alt_sum_literal(p, n)
    else:
        value = alt_sum_literal(p, n - 1) - fib(p.k, p.a * n)
    return SumResult(
        params=p,
        n=n,
        kind=SumKind.ALTERNATING,
        value=value,
        method=SumMethod.CLOSED,
        denominator=sum_denominator(p, SumKind.ALTERNATING),
    )


def _geometric_fib_sum(p: Params, m: Mat2, n: int) -> int:
    # sum_{i<=n} m^i = adj(I - m) (I - m^{n+1}) / det(I - m); entry (1,0) is sum / 2F_{k,a}
    ident = Mat2.identity()
    one_minus = mat_sub(ident, m)
    det = one_minus.det()
    if det.denominator != 1 or det == 0:
        raise InexactDivision(det.numerator, det.denominator)
    prod = mat_mul(adjugate(one_minus), mat_sub(ident, mat_pow(m, n + 1)))
    return checked_div(2 * fib(p.k, p.a) * prod.n10, det.numerator << prod.scale)


def sum_arith_matrix(p: Params, n: int) -> SumResult:
    """Plain sum through the geometric series of S_a."""
    _check_index(n)
    return SumResult(
        params=p,
        n=n,
        kind=SumKind.PLAIN,
        value=_geometric_fib_sum(p, s_matrix(p), n),
        method=SumMethod.MATRIX,
        denominator=sum_denominator_from_matrix(p, SumKind.PLAIN),
    )


def alt_sum_arith_matrix(p: Params, n: int) -> SumResult:
    """Alternating sum through the geometric series of -S_a; valid at every parity."""
    _check_index(n)
    return SumResult(
        params=p,
        n=n,
        kind=SumKind.ALTERNATING,
        value=_geometric_fib_sum(p, mat_neg(s_matrix(p)), n),
        method=SumMethod.MATRIX,
        denominator=sum_denominator_from_matrix(p, SumKind.ALTERNATING),
    )


def sum_naive_result(p: Params, n: int, kind: SumKind) -> SumResult:
    naive = sum_arith_naive if kind is SumKind.PLAIN else alt_sum_arith_naive
    return SumResult(
        params=p,
        n=n,
        kind=kind,
        value=naive(p, n),
        method=SumMethod.NAIVE,
        denominator=sum_denominator(p, kind),
    )


def evaluate_sum(p: Params, n: int, kind: SumKind, method: SumMethod) -> SumResult:
    if method is SumMethod.NAIVE:
        return sum_naive_result(p, n, kind)
    if method is SumMethod.MATRIX:
        return (sum_arith_matrix if kind is SumKind.PLAIN else alt_sum_arith_matrix)(p, n)
    return (sum_arith_closed if kind is SumKind.PLAIN else alt_sum_arith_closed)(p, n)


def audit_alt_sum_parity(kmax: int, amax: int, nmax: int) -> list[ErratumFinding]:
    """
    For every odd n in [1, nmax], set the literal alternating formula next to
    the oracle. Findings are reported, never raised.
    """
    findings = []
    for k in range(1, kmax + 1):
        for a in range(1, amax + 1):
            p = Params(k=k, a=a)
            for n in range(1, nmax + 1, 2):
                oracle = alt_sum_arith_naive(p, n)
                try:
                    statement = alt_sum_literal(p, n)
                except InexactDivision:
                    findings.append(
                        ErratumFinding(k=k, a=a, n=n, oracle=oracle, outcome="inexact")
                    )
                    continue
                outcome = "agrees" if statement == oracle else "mismatch"
                findings.append(
                    ErratumFinding(k=k, a=a, n=n, oracle=oracle, statement=statement, outcome=outcome)
                )
    logger.debug(
        "alternating-sum parity audit: %d odd points, %d disagree",
        len(findings),
        sum(f.outcome != "agrees" for f in findings),
    )
    return findings
