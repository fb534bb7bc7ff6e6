"""
Matrix Power Strategy

Raises R_1 = [[k, 1], [1, 0]] to the n-th power; R_1^n = [[F_{n+1}, F_n], [F_n, F_{n-1}]].
"""

from typing import Optional

from adapters.strategies.base import BaseStrategy
from kfib.closed_forms import r_matrix
from kfib.exact import Mat2, OpCounter, Params, mat_square, multiplier


class MatrixPowStrategy(BaseStrategy):
    """
    Left-to-right binary powering of R_1.

    Squarings go through mat_square (five products). A set bit multiplies by
    R_1, which on the symmetric power [[x, y], [y, z]] is the shift
    [[k*x + y, x], [x, y]] and costs one product.
    """

    @property
    def strategy_name(self) -> str:
        return "matrix-pow"

    def evaluate(self, k: int, n: int, counter: Optional[OpCounter] = None) -> int:
        if n < 0:
            raise ValueError(f"matrix-pow index must be non-negative, got {n}")
        if n == 0:
            return 0
        mul = multiplier(counter)
        m = r_matrix(Params(k=k, a=1))
        for bit in bin(n)[3:]:
            m = mat_square(m, counter)
            if bit == "1":
                m = Mat2(mul(k, m.n00) + m.n01, m.n00, m.n00, m.n01)
        return m.n01

    def max_mults(self, n: int) -> int:
        return 8 * max(n.bit_length() - 1, 0) + 8
