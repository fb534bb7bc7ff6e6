"""
Base Strategy Interface

This module defines the abstract base class for all evaluation strategies.
Every strategy computes the same value F_{k,n}; they differ only in how many
big-integer products they spend, which is what the benchmark compares.
"""

from abc import ABC, abstractmethod
from typing import Optional

from kfib.exact import OpCounter


class BaseStrategy(ABC):
    """
    Abstract base class for F_{k,n} evaluation strategies.

    This interface defines the contract that all strategies must follow, so
    the benchmark harness can time and cross-check them interchangeably.
    """

    @abstractmethod
    def evaluate(self, k: int, n: int, counter: Optional[OpCounter] = None) -> int:
        """
        Compute F_{k,n}.

        Args:
            k: Sequence parameter, at least 1
            n: Index, at least 0
            counter: Optional multiplication counter to charge

        Returns:
            F_{k,n} as an exact integer

        Raises:
            ValueError: If k or n is out of range
        """
        pass

    @abstractmethod
    def max_mults(self, n: int) -> int:
        """
        Upper bound on counted products for index n.

        Returns:
            The documented worst-case multiplication count
        """
        pass

    @property
    @abstractmethod
    def strategy_name(self) -> str:
        """
        Return the name of this strategy.

        Returns:
            String identifier used on the command line
        """
        pass
