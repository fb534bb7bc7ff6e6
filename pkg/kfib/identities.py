"""
Identity residuals and the grid verifier.

Each identity is written as a pair of sides (lhs, rhs); its residual is
lhs - rhs and must vanish. verify_grid evaluates a chosen identity over a
(k, a, n, m) grid and collects every counterexample instead of stopping at
the first one.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Optional

from pydantic import BaseModel, ConfigDict

from kfib.closed_forms import (
    CharRelation,
    conjugate_fixture,
    generic_power,
    r_matrix,
    r_power_closed,
    s_matrix,
    s_power_closed,
)
from kfib.errors import KFibError
from kfib.exact import Mat2, Params, mat_inv, mat_pow, mat_scale, mat_sub, neg_one_pow
from kfib.sequences import fib, lucas
from kfib.sums import alt_sum_arith_closed, alt_sum_arith_naive, sum_arith_closed, sum_arith_naive

logger = logging.getLogger(__name__)

Sides = Callable[[Params, int, int], tuple[Any, Any]]

# Unimodular conjugators for the general-power fixtures.
CONJUGATORS = (
    Mat2(1, 1, 0, 1),
    Mat2(2, 1, 1, 1),
    Mat2(0, 1, 1, 0),
)


class Identity(str, Enum):
    CATALAN = "catalan"
    CATALAN_DET = "catalan-det"
    ADDITION = "addition"
    SUBTRACTION = "subtraction"
    HONSBERGER = "honsberger"
    DOCAGNE = "docagne"
    MATRIX_RECURRENCE = "matrix-recurrence"
    R_POWER = "r-power"
    S_POWER = "s-power"
    GENERIC_POWER = "generic-power"
    SUM = "sum"
    ALT_SUM = "alt-sum"


class Failure(BaseModel):
    model_config = ConfigDict(frozen=True)

    k: int
    a: int
    n: int
    m: int
    lhs: str
    rhs: str


class IdentityReport(BaseModel):
    """Outcome of one identity over a grid; bounds are inclusive."""

    identity: Identity
    k_range: tuple[int, int]
    a_range: tuple[int, int]
    n_range: tuple[int, int]
    m_range: tuple[int, int]
    checked: int
    failures: list[Failure]

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def holds_at_zero(self) -> Optional[bool]:
        """Whether the n = 0 layer held; None when the grid starts above 0."""
        if not self.n_range[0] <= 0 <= self.n_range[1]:
            return None
        return all(f.n != 0 for f in self.failures)


# --- residuals -------------------------------------------------------------

def _catalan_sides(p: Params, n: int, _m: int = 0) -> tuple[int, int]:
    k, a = p.k, p.a
    f1, f0 = fib(k, a * (n + 1)), fib(k, a * n)
    lhs = f1 * f1 - lucas(k, a) * f0 * f1 + neg_one_pow(a) * f0 * f0
    fa = fib(k, a)
    return lhs, fa * fa * neg_one_pow(a * n)


def catalan_like_residual(p: Params, n: int) -> int:
    """F_{a(n+1)}^2 - L_a F_{an} F_{a(n+1)} + (-1)^a F_{an}^2 - F_a^2 (-1)^{an}; stated for n >= 1."""
    lhs, rhs = _catalan_sides(p, n)
    return lhs - rhs


def catalan_determinant_sides(p: Params, n: int, _m: int = 0) -> tuple[Any, int]:
    """4F_a^2 det(S_a^n) against 4 times the Catalan-like left-hand side."""
    fa = fib(p.k, p.a)
    lhs, _ = _catalan_sides(p, n)
    return 4 * fa * fa * s_power_closed(p, n).det(), 4 * lhs


def _addition_sides(p: Params, n: int, m: int) -> tuple[int, int]:
    k, a = p.k, p.a
    fan, fam = fib(k, a * n), fib(k, a * m)
    rhs = fib(k, a * (n + 1)) * fam + fib(k, a * (m + 1)) * fan - lucas(k, a) * fan * fam
    return fib(k, a) * fib(k, a * (n + m)), rhs


def addition_residual(p: Params, n: int, m: int) -> int:
    lhs, rhs = _addition_sides(p, n, m)
    return lhs - rhs


def _subtraction_sides(p: Params, n: int, m: int) -> tuple[int, int]:
    k, a = p.k, p.a
    lhs = neg_one_pow(a * m) * fib(k, a) * fib(k, a * (n - m))
    rhs = fib(k, a * (m + 1)) * fib(k, a * n) - fib(k, a * (n + 1)) * fib(k, a * m)
    return lhs, rhs


def subtraction_residual(p: Params, n: int, m: int) -> int:
    """Uses the negative-index extension when m > n."""
    lhs, rhs = _subtraction_sides(p, n, m)
    return lhs - rhs


def _honsberger_sides(p: Params, n: int, m: int) -> tuple[int, int]:
    k = p.k
    return fib(k, n + m), fib(k, m + 1) * fib(k, n) + fib(k, m) * fib(k, n - 1)


def honsberger_residual(k: int, n: int, m: int) -> int:
    """F_{n+m} - (F_{m+1}F_n + F_m F_{n-1}); n = 0 reads F_{k,-1} = 1."""
    lhs, rhs = _honsberger_sides(Params(k=k, a=1), n, m)
    return lhs - rhs


def _docagne_sides(p: Params, n: int, m: int) -> tuple[int, int]:
    k = p.k
    return neg_one_pow(m) * fib(k, n - m), fib(k, m + 1) * fib(k, n) - fib(k, n + 1) * fib(k, m)


def docagne_residual(k: int, n: int, m: int) -> int:
    lhs, rhs = _docagne_sides(Params(k=k, a=1), n, m)
    return lhs - rhs


def _matrix_recurrence_sides(p: Params, n: int, _m: int = 0) -> tuple[Mat2, Mat2]:
    rhs = mat_sub(
        mat_scale(r_power_closed(p, n), lucas(p.k, p.a)),
        mat_scale(r_power_closed(p, n - 1), neg_one_pow(p.a)),
    )
    return r_power_closed(p, n + 1), rhs


def matrix_recurrence_residual(p: Params, n: int) -> Mat2:
    """R_a^{n+1} - (L_a R_a^n - (-1)^a R_a^{n-1}) for n >= 1; the zero matrix."""
    lhs, rhs = _matrix_recurrence_sides(p, n)
    return mat_sub(lhs, rhs)


def _r_power_sides(p: Params, n: int, _m: int = 0) -> tuple[Mat2, Mat2]:
    return r_power_closed(p, n), mat_pow(r_matrix(p), n)


def _s_power_sides(p: Params, n: int, _m: int = 0) -> tuple[Mat2, Mat2]:
    return s_power_closed(p, n), mat_pow(s_matrix(p), n)


def power_fixture(p: Params, index: int) -> Mat2:
    """0 -> R_a, 1 -> S_a, 2.. -> R_a conjugated by CONJUGATORS[index - 2]."""
    if index == 0:
        return r_matrix(p)
    if index == 1:
        return s_matrix(p)
    return conjugate_fixture(p, CONJUGATORS[index - 2])


def _generic_power_sides(p: Params, n: int, m: int) -> tuple[Mat2, Mat2]:
    t = power_fixture(p, m)
    direct = mat_pow(t, n) if n >= 0 else mat_pow(mat_inv(t), -n)
    return generic_power(t, CharRelation.for_params(p), n), direct


def _sum_sides(p: Params, n: int, _m: int = 0) -> tuple[int, int]:
    return sum_arith_closed(p, n).value, sum_arith_naive(p, n)


def _alt_sum_sides(p: Params, n: int, _m: int = 0) -> tuple[int, int]:
    return alt_sum_arith_closed(p, n).value, alt_sum_arith_naive(p, n)


# --- grid verification -----------------------------------------------------

@dataclass(frozen=True)
class _Check:
    sides: Sides
    uses_a: bool = True
    uses_m: bool = False
    n_min: int = 0
    symmetric_n: bool = False
    fixed_m: Optional[int] = None


CHECKS: dict[Identity, _Check] = {
    Identity.CATALAN: _Check(_catalan_sides, n_min=1),
    Identity.CATALAN_DET: _Check(catalan_determinant_sides, n_min=1),
    Identity.ADDITION: _Check(_addition_sides, uses_m=True),
    Identity.SUBTRACTION: _Check(_subtraction_sides, uses_m=True),
    Identity.HONSBERGER: _Check(_honsberger_sides, uses_a=False, uses_m=True),
    Identity.DOCAGNE: _Check(_docagne_sides, uses_a=False, uses_m=True),
    Identity.MATRIX_RECURRENCE: _Check(_matrix_recurrence_sides, n_min=1),
    Identity.R_POWER: _Check(_r_power_sides, n_min=1),
    Identity.S_POWER: _Check(_s_power_sides, n_min=1),
    Identity.GENERIC_POWER: _Check(
        _generic_power_sides, symmetric_n=True, fixed_m=2 + len(CONJUGATORS)
    ),
    Identity.SUM: _Check(_sum_sides),
    Identity.ALT_SUM: _Check(_alt_sum_sides),
}


def _grid(check: _Check, kmax: int, amax: int, nmax: int, mmax: int):
    a_hi = amax if check.uses_a else 1
    n_lo = -nmax if check.symmetric_n else check.n_min
    if check.fixed_m is not None:
        m_hi = check.fixed_m - 1
    else:
        m_hi = mmax if check.uses_m else 0
    return (1, kmax), (1, a_hi), (n_lo, nmax), (0, m_hi)


def _evaluate_slice(
    sides: Sides,
    k: int,
    a_range: tuple[int, int],
    n_range: tuple[int, int],
    m_range: tuple[int, int],
) -> tuple[int, list[Failure]]:
    checked = 0
    failures = []
    for a in range(a_range[0], a_range[1] + 1):
        p = Params(k=k, a=a)
        for n in range(n_range[0], n_range[1] + 1):
            for m in range(m_range[0], m_range[1] + 1):
                checked += 1
                try:
                    lhs, rhs = sides(p, n, m)
                except KFibError as e:
                    failures.append(Failure(k=k, a=a, n=n, m=m, lhs=str(e), rhs=""))
                    continue
                if lhs != rhs:
                    failures.append(Failure(k=k, a=a, n=n, m=m, lhs=str(lhs), rhs=str(rhs)))
    return checked, failures


def verify_grid(
    identity: Identity,
    kmax: int,
    amax: int,
    nmax: int,
    mmax: int,
    *,
    workers: int = 1,
    sides: Optional[Sides] = None,
) -> IdentityReport:
    """
    Evaluate an identity at every grid point, k outermost and m innermost.

    Args:
        identity: Which identity to check; fixes the grid shape
        kmax, amax, nmax, mmax: Inclusive upper bounds, each at least 1
        workers: Processes to split the k axis over; 1 runs inline
        sides: Replacement (lhs, rhs) evaluator, e.g. a deliberately broken one

    Returns:
        IdentityReport with failures sorted by (k, a, n, m)
    """
    if min(kmax, amax, nmax, mmax) < 1:
        raise ValueError("verify_grid bounds must all be at least 1")
    check = CHECKS[identity]
    evaluator = sides or check.sides
    k_range, a_range, n_range, m_range = _grid(check, kmax, amax, nmax, mmax)
    ks = range(k_range[0], k_range[1] + 1)

    if workers > 1 and sides is None and len(ks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(
                    _evaluate_slice,
                    [evaluator] * len(ks),
                    ks,
                    [a_range] * len(ks),
                    [n_range] * len(ks),
                    [m_range] * len(ks),
                )
            )
    else:
        parts = [_evaluate_slice(evaluator, k, a_range, n_range, m_range) for k in ks]

    checked = sum(c for c, _ in parts)
    failures = sorted(
        (f for _, fs in parts for f in fs), key=lambda f: (f.k, f.a, f.n, f.m)
    )
    logger.debug("%s: checked=%d failures=%d", identity.value, checked, len(failures))
    return IdentityReport(
        identity=identity,
        k_range=k_range,
        a_range=a_range,
        n_range=n_range,
        m_range=m_range,
        checked=checked,
        failures=failures,
    )
