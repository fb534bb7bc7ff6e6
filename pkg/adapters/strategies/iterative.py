"""
Iterative Strategy

Walks the recurrence F_{k,i+1} = k*F_{k,i} + F_{k,i-1} one step at a time.
"""

from typing import Optional

from adapters.strategies.base import BaseStrategy
from kfib.exact import OpCounter
from kfib.sequences import fib_iterative


class IterativeStrategy(BaseStrategy):
    """Linear-time recurrence walk, one product per step."""

    @property
    def strategy_name(self) -> str:
        return "iterative"

    def evaluate(self, k: int, n: int, counter: Optional[OpCounter] = None) -> int:
        return fib_iterative(k, n, counter)

    def max_mults(self, n: int) -> int:
        return max(n - 1, 0)
