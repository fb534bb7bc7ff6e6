"""
Exact Core

Arbitrary-precision integer helpers and exact 2x2 matrices whose entries are
integer numerators over a common power of two. Every matrix used by the
library (R_a, S_a, their powers, inverses and conjugates) has such a
denominator, so no general rational arithmetic is needed.
"""

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from pydantic import BaseModel, ConfigDict, Field

from kfib.errors import InexactDivision, NotInvertibleExactly


class Params(BaseModel):
    """Sequence parameter k and index stride a, both at least 1."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=1, description="k-Fibonacci family parameter")
    a: int = Field(..., ge=1, description="Index stride of the subsequence F_{k,an}")


@dataclass
class OpCounter:
    """
    Per-call instrumentation for multiplication counts.

    `mults` counts integer products that involve a sequence value;
    `products` counts matrix products (squarings included).
    """

    mults: int = 0
    products: int = 0

    def mul(self, x: int, y: int) -> int:
        self.mults += 1
        return x * y


def multiplier(counter: Optional[OpCounter]) -> Callable[[int, int], int]:
    return counter.mul if counter is not None else operator.mul


def neg_one_pow(e: int) -> int:
    """(-1)^e for any integer e."""
    return -1 if e & 1 else 1


def checked_div(num: int, den: int) -> int:
    """
    Exact integer division.

    Args:
        num: Dividend
        den: Divisor, nonzero

    Returns:
        q with q * den == num

    Raises:
        ZeroDivisionError: If den is 0
        InexactDivision: If den does not divide num
    """
    if den == 0:
        raise ZeroDivisionError("checked_div: division by zero")
    q, r = divmod(num, den)
    if r:
        raise InexactDivision(num, den)
    return q


@dataclass(frozen=True)
class Mat2:
    """
    The matrix [[n00, n01], [n10, n11]] / 2**scale, always in canonical form.

    Canonical form: scale is 0, or at least one numerator is odd. Equality and
    hashing compare canonical forms, so equal matrices compare equal whatever
    scale they were built with.
    """

    n00: int
    n01: int
    n10: int
    n11: int
    scale: int = 0

    def __post_init__(self) -> None:
        if self.scale < 0:
            raise ValueError(f"Mat2 scale must be non-negative, got {self.scale}")
        bits = self.n00 | self.n01 | self.n10 | self.n11
        if bits == 0:
            object.__setattr__(self, "scale", 0)
            return
        shift = min((bits & -bits).bit_length() - 1, self.scale)
        if shift:
            for name in ("n00", "n01", "n10", "n11"):
                object.__setattr__(self, name, getattr(self, name) >> shift)
            object.__setattr__(self, "scale", self.scale - shift)

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    @classmethod
    def zero(cls) -> "Mat2":
        return cls(0, 0, 0, 0)

    @property
    def numerators(self) -> tuple[int, int, int, int]:
        return (self.n00, self.n01, self.n10, self.n11)

    def entries(self) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        """Entries as exact fractions, row-major."""
        d = 1 << self.scale
        return (
            (Fraction(self.n00, d), Fraction(self.n01, d)),
            (Fraction(self.n10, d), Fraction(self.n11, d)),
        )

    def det(self) -> Fraction:
        """Exact determinant (n00*n11 - n01*n10) / 4**scale."""
        return Fraction(self.n00 * self.n11 - self.n01 * self.n10, 1 << (2 * self.scale))

    def trace(self) -> Fraction:
        return Fraction(self.n00 + self.n11, 1 << self.scale)

    def is_integral(self) -> bool:
        return self.scale == 0

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return mat_mul(self, other)

    def __add__(self, other: "Mat2") -> "Mat2":
        return mat_add(self, other)

    def __sub__(self, other: "Mat2") -> "Mat2":
        return mat_sub(self, other)

    def __neg__(self) -> "Mat2":
        return mat_neg(self)

    def __str__(self) -> str:
        (a, b), (c, d) = self.entries()
        return f"[[{a},{b}],[{c},{d}]]"


def canonical(x: Mat2) -> Mat2:
    """Rebuild x from its numerators and scale; a no-op on canonical input."""
    return Mat2(x.n00, x.n01, x.n10, x.n11, x.scale)


def _aligned(x: Mat2, y: Mat2) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    s = max(x.scale, y.scale)
    xs, ys = s - x.scale, s - y.scale
    return (
        tuple(v << xs for v in x.numerators),
        tuple(v << ys for v in y.numerators),
        s,
    )


def mat_add(x: Mat2, y: Mat2) -> Mat2:
    xn, yn, s = _aligned(x, y)
    return Mat2(*(p + q for p, q in zip(xn, yn)), scale=s)


def mat_sub(x: Mat2, y: Mat2) -> Mat2:
    xn, yn, s = _aligned(x, y)
    return Mat2(*(p - q for p, q in zip(xn, yn)), scale=s)


def mat_neg(x: Mat2) -> Mat2:
    return Mat2(-x.n00, -x.n01, -x.n10, -x.n11, x.scale)


def mat_scale(x: Mat2, c: int) -> Mat2:
    """c * x for an integer c."""
    return Mat2(c * x.n00, c * x.n01, c * x.n10, c * x.n11, x.scale)


def adjugate(x: Mat2) -> Mat2:
    return Mat2(x.n11, -x.n01, -x.n10, x.n00, x.scale)


def mat_div_scalar(x: Mat2, d: int) -> Mat2:
    """
    x / d for a nonzero integer d.

    The power-of-two part of d moves into the scale; the odd part must divide
    every numerator.

    Raises:
        ZeroDivisionError: If d is 0
        InexactDivision: If the odd part of d leaves a remainder
    """
    if d == 0:
        raise ZeroDivisionError("mat_div_scalar: division by zero")
    twos = (d & -d).bit_length() - 1
    odd = d >> twos
    return Mat2(
        *(checked_div(v, odd) for v in x.numerators),
        scale=x.scale + twos,
    )


def mat_mul(x: Mat2, y: Mat2, counter: Optional[OpCounter] = None) -> Mat2:
    """Exact product x @ y; the raw scale is x.scale + y.scale before canonicalization."""
    mul = multiplier(counter)
    if counter is not None:
        counter.products += 1
    return Mat2(
        mul(x.n00, y.n00) + mul(x.n01, y.n10),
        mul(x.n00, y.n01) + mul(x.n01, y.n11),
        mul(x.n10, y.n00) + mul(x.n11, y.n10),
        mul(x.n10, y.n01) + mul(x.n11, y.n11),
        x.scale + y.scale,
    )


def mat_square(x: Mat2, counter: Optional[OpCounter] = None) -> Mat2:
    """x @ x using five entry products."""
    mul = multiplier(counter)
    if counter is not None:
        counter.products += 1
    a, b, c, d = x.numerators
    bc = mul(b, c)
    t = a + d
    return Mat2(
        mul(a, a) + bc,
        mul(b, t),
        mul(c, t),
        mul(d, d) + bc,
        2 * x.scale,
    )


def mat_pow(x: Mat2, e: int, counter: Optional[OpCounter] = None) -> Mat2:
    """
    x**e by left-to-right binary powering.

    Uses floor(log2 e) squarings plus popcount(e) - 1 multiplications, at most
    2*floor(log2 e) + 1 matrix products for e >= 1. x**0 is the identity.

    Raises:
        ValueError: If e is negative (use mat_inv first)
    """
    if e < 0:
        raise ValueError(f"mat_pow exponent must be non-negative, got {e}")
    if e == 0:
        return Mat2.identity()
    result = x
    for bit in bin(e)[3:]:
        result = mat_square(result, counter)
        if bit == "1":
            result = mat_mul(result, x, counter)
    return result


def mat_inv(x: Mat2) -> Mat2:
    """
    Exact inverse via adjugate over determinant.

    For x = N / 2**s the inverse is 2**s * adj(N) / det(N).

    Raises:
        NotInvertibleExactly: If det(N) is 0 or its odd part does not divide
            the adjugate, i.e. the inverse has no power-of-two scale
    """
    d = x.n00 * x.n11 - x.n01 * x.n10
    if d == 0:
        raise NotInvertibleExactly(f"NotInvertibleExactly: singular matrix {x}")
    adj = Mat2(x.n11 << x.scale, -x.n01 << x.scale, -x.n10 << x.scale, x.n00 << x.scale)
    try:
        return mat_div_scalar(adj, d)
    except InexactDivision as e:
        raise NotInvertibleExactly(
            f"NotInvertibleExactly: inverse of {x} needs denominator {d}"
        ) from e
