"""
Fast Doubling Strategy

Thin adapter over kfib.sequences.fib_pair_fast.
"""

from typing import Optional

from adapters.strategies.base import BaseStrategy
from kfib.exact import OpCounter
from kfib.sequences import fib_pair_fast


class FastDoublingStrategy(BaseStrategy):
    """Three products per bit of n."""

    @property
    def strategy_name(self) -> str:
        return "fast-doubling"

    def evaluate(self, k: int, n: int, counter: Optional[OpCounter] = None) -> int:
        return fib_pair_fast(k, n, counter)[0]

    def max_mults(self, n: int) -> int:
        return 3 * max(n.bit_length() - 1, 0) + 3
