"""
k-Fibonacci and k-Lucas kernels.

F_{k,0} = 0, F_{k,1} = 1, F_{k,n+1} = k*F_{k,n} + F_{k,n-1}; k = 1 gives the
classical Fibonacci numbers and k = 2 the Pell numbers. Negative indexes use
F_{k,-n} = (-1)^(n+1) * F_{k,n}. L_{k,n} = F_{k,n+1} + F_{k,n-1} at every
integer n, so L_{k,0} = 2.
"""

import math
from functools import lru_cache
from typing import Optional

from pydantic import BaseModel, ConfigDict

from kfib.errors import IndexTooLarge
from kfib.exact import OpCounter, Params, multiplier, neg_one_pow

# Largest index the double-precision Binet check accepts.
BINET_MAX_INDEX = 70

# Above this index fib and lucas switch from the recurrence to fast doubling.
FAST_CUTOFF = 64


class SeqPoint(BaseModel):
    """F_{k,n} and L_{k,n} at one index."""

    model_config = ConfigDict(frozen=True)

    params: Params
    n: int
    f: int
    l: int


class RootPair(BaseModel):
    """Double-precision roots (k +- sqrt(k^2 + 4)) / 2 of x^2 = k*x + 1."""

    model_config = ConfigDict(frozen=True)

    sigma1: float
    sigma2: float

    @classmethod
    def for_k(cls, k: int) -> "RootPair":
        root = math.sqrt(k * k + 4)
        return cls(sigma1=(k + root) / 2, sigma2=(k - root) / 2)


def fib_iterative(k: int, n: int, counter: Optional[OpCounter] = None) -> int:
    """
    F_{k,n} for n >= 0 by iterating the recurrence.

    Performs exactly n - 1 counted products for n >= 1.
    """
    if n < 0:
        raise ValueError(f"fib_iterative index must be non-negative, got {n}")
    if n == 0:
        return 0
    mul = multiplier(counter)
    prev, cur = 0, 1
    for _ in range(n - 1):
        prev, cur = cur, mul(k, cur) + prev
    return cur


@lru_cache(maxsize=8192)
def fib(k: int, n: int) -> int:
    """
    F_{k,n} for any integer n.

    Examples:
        >>> fib(1, 10)
        55
        >>> fib(2, 5)
        29
        >>> fib(3, -4)
        -33
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if n < 0:
        return neg_one_pow(-n + 1) * fib(k, -n)
    if n <= FAST_CUTOFF:
        return fib_iterative(k, n)
    return fib_pair_fast(k, n)[0]


@lru_cache(maxsize=8192)
def lucas(k: int, n: int) -> int:
    """
    L_{k,n} = F_{k,n+1} + F_{k,n-1} for any integer n.

    Evaluated as 2F_{k,n+1} - k*F_{k,n} from one fast-doubling pair;
    L_{k,-n} = (-1)^n * L_{k,n}.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if n < 0:
        return neg_one_pow(n) * lucas(k, -n)
    f0, f1 = fib_pair_fast(k, n)
    return 2 * f1 - k * f0


def lucas_recurrence(k: int, n: int) -> int:
    """L_{k,n} for n >= 0 from L_{k,0} = 2, L_{k,1} = k and the k-recurrence."""
    if n < 0:
        raise ValueError(f"lucas_recurrence index must be non-negative, got {n}")
    prev, cur = 2, k
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, k * cur + prev
    return cur


def seq_point(p: Params, n: int) -> SeqPoint:
    if n < 0:
        return SeqPoint(params=p, n=n, f=fib(p.k, n), l=lucas(p.k, n))
    f0, f1 = fib_pair_fast(p.k, n)
    return SeqPoint(params=p, n=n, f=f0, l=2 * f1 - p.k * f0)


def fib_pair_fast(k: int, n: int, counter: Optional[OpCounter] = None) -> tuple[int, int]:
    """
    (F_{k,n}, F_{k,n+1}) by fast doubling.

    From (F_m, F_{m+1}) each bit of n costs three counted products:

        bit 0: L_m = 2F_{m+1} - k*F_m,   F_{2m} = F_m*L_m,
               F_{2m+1} = F_{m+1}*L_m - (-1)^m
        bit 1: L_{m+1} = k*F_{m+1} + 2F_m,   F_{2m+1} = F_m*L_{m+1} + (-1)^m,
               F_{2m+2} = F_{m+1}*L_{m+1}

    Both branches are the addition rule F_{n+m} = F_{m+1}F_n + F_m F_{n-1}
    taken at m = n and m = n + 1, rewritten with Cassini's identity. Starting
    from (F_1, F_2) = (1, k) the leading bit is free, so at most
    3*floor(log2 n) products are counted.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if n < 0:
        raise ValueError(f"fib_pair_fast index must be non-negative, got {n}")
    if n == 0:
        return 0, 1
    mul = multiplier(counter)
    m, f0, f1 = 1, 1, k
    for bit in bin(n)[3:]:
        sign = neg_one_pow(m)
        if bit == "0":
            lm = (f1 << 1) - mul(k, f0)
            f0, f1 = mul(f0, lm), mul(f1, lm) - sign
            m = 2 * m
        else:
            lm1 = mul(k, f1) + (f0 << 1)
            f0, f1 = mul(f0, lm1) + sign, mul(f1, lm1)
            m = 2 * m + 1
    return f0, f1


def delta(p: Params) -> int:
    """Delta_a = L_{k,a}^2 - 4(-1)^a, always positive."""
    la = lucas(p.k, p.a)
    return la * la - 4 * neg_one_pow(p.a)


def epsilon(p: Params, n: int) -> int:
    """epsilon_a(n) = 2F_{k,a(n+1)} - L_{k,a}F_{k,an}."""
    if n < 0:
        raise ValueError(f"epsilon index must be non-negative, got {n}")
    return 2 * fib(p.k, p.a * (n + 1)) - lucas(p.k, p.a) * fib(p.k, p.a * n)


def binet_check(k: int, n: int) -> float:
    """
    Relative residual of Binet's formula against the exact F_{k,n}.

    Floating-point cross-check only; never a computation path.

    Raises:
        IndexTooLarge: If n is outside [0, BINET_MAX_INDEX] or the powers overflow
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if not 0 <= n <= BINET_MAX_INDEX:
        raise IndexTooLarge(f"IndexTooLarge: Binet check supports 0 <= n <= {BINET_MAX_INDEX}, got {n}")
    roots = RootPair.for_k(k)
    try:
        approx = (roots.sigma1**n - roots.sigma2**n) / (roots.sigma1 - roots.sigma2)
    except OverflowError as e:
        raise IndexTooLarge(f"IndexTooLarge: sigma^{n} overflows for k={k}") from e
    exact = fib(k, n)
    return abs(approx - exact) / max(1, exact)
