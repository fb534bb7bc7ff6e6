"""
Matrix Closed Forms

Constructors for R_a and S_a, their closed-form n-th powers, and the general
power formula for any 2x2 matrix T with T^2 = L_{k,a}*T - (-1)^a*I:

    F_{k,a} * T^n = F_{k,an} * T - (-1)^a * F_{k,a(n-1)} * I        (n >= 0)
    F_{k,a} * T^-m = (-1)^(am+1) F_{k,am} * T + (-1)^(am) F_{k,a(m+1)} * I
"""

from pydantic import BaseModel, ConfigDict

from kfib.errors import NotUnimodular, RelationViolated
from kfib.exact import (
    Mat2,
    Params,
    checked_div,
    mat_add,
    mat_div_scalar,
    mat_inv,
    mat_mul,
    mat_scale,
    mat_square,
    mat_sub,
    neg_one_pow,
)
from kfib.sequences import delta, epsilon, fib, lucas


class CharRelation(BaseModel):
    """The relation T^2 = trace*T - det*I with trace L_{k,a} and det (-1)^a."""

    model_config = ConfigDict(frozen=True)

    params: Params
    trace: int
    det: int

    @classmethod
    def for_params(cls, p: Params) -> "CharRelation":
        return cls(params=p, trace=lucas(p.k, p.a), det=neg_one_pow(p.a))

    def holds(self, t: Mat2) -> bool:
        rhs = mat_sub(mat_scale(t, self.trace), mat_scale(Mat2.identity(), self.det))
        return mat_square(t) == rhs


def r_matrix(p: Params) -> Mat2:
    """R_a = [[L_{k,a}, -(-1)^a], [1, 0]]."""
    return Mat2(lucas(p.k, p.a), -neg_one_pow(p.a), 1, 0)


def s_matrix(p: Params) -> Mat2:
    """S_a = 1/2 [[L_{k,a}, Delta_a], [1, L_{k,a}]]."""
    la = lucas(p.k, p.a)
    return Mat2(la, delta(p), 1, la, scale=1)


def r_power_closed(p: Params, n: int) -> Mat2:
    """
    R_a^n from F values alone:

        (1/F_{k,a}) [[F_{k,a(n+1)}, -(-1)^a F_{k,an}], [F_{k,an}, -(-1)^a F_{k,a(n-1)}]]

    n = 0 gives the identity. Every division is checked.
    """
    if n < 0:
        raise ValueError(f"r_power_closed exponent must be non-negative, got {n}")
    if n == 0:
        return Mat2.identity()
    k, a = p.k, p.a
    fa = fib(k, a)
    s = -neg_one_pow(a)
    return Mat2(
        checked_div(fib(k, a * (n + 1)), fa),
        checked_div(s * fib(k, a * n), fa),
        checked_div(fib(k, a * n), fa),
        checked_div(s * fib(k, a * (n - 1)), fa),
    )


def s_power_closed(p: Params, n: int) -> Mat2:
    """
    S_a^n = (1/2F_{k,a}) [[eps_a(n), Delta_a F_{k,an}], [F_{k,an}, eps_a(n)]].

    F_{k,a} divides every numerator, so the result has scale at most 1.
    """
    if n < 0:
        raise ValueError(f"s_power_closed exponent must be non-negative, got {n}")
    if n == 0:
        return Mat2.identity()
    fa = fib(p.k, p.a)
    fan = fib(p.k, p.a * n)
    eps = checked_div(epsilon(p, n), fa)
    return Mat2(
        eps,
        checked_div(delta(p) * fan, fa),
        checked_div(fan, fa),
        eps,
        scale=1,
    )


def generic_power(t: Mat2, rel: CharRelation, n: int) -> Mat2:
    """
    T^n for any integer n, for T satisfying `rel`.

    Raises:
        RelationViolated: If T^2 != trace*T - det*I
        InexactDivision: If a division by F_{k,a} is not exact
    """
    if not rel.holds(t):
        raise RelationViolated(
            f"RelationViolated: {t} does not satisfy T^2 = {rel.trace}T - ({rel.det})I"
        )
    k, a = rel.params.k, rel.params.a
    if n >= 0:
        coef_t = fib(k, a * n)
        coef_i = -neg_one_pow(a) * fib(k, a * (n - 1))
    else:
        m = -n
        sign = neg_one_pow(a * m)
        coef_t = -sign * fib(k, a * m)
        coef_i = sign * fib(k, a * (m + 1))
    combined = mat_add(mat_scale(t, coef_t), mat_scale(Mat2.identity(), coef_i))
    return mat_div_scalar(combined, fib(k, a))


def conjugate_fixture(p: Params, conj: Mat2) -> Mat2:
    """
    conj @ R_a @ conj^-1, an integer matrix satisfying CharRelation(p).

    Raises:
        NotUnimodular: If conj is not an integer matrix of determinant +1 or -1
    """
    if not conj.is_integral() or conj.det() not in (1, -1):
        raise NotUnimodular(f"NotUnimodular: {conj} has determinant {conj.det()}")
    return mat_mul(mat_mul(conj, r_matrix(p)), mat_inv(conj))
