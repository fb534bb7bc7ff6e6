"""
Adapters package - Contains all F_{k,n} evaluation strategies.

This package provides a unified interface for the different ways of
computing k-Fibonacci numbers through the adapter pattern.
"""

from adapters.factory import StrategyFactory, get_strategy, register_default_strategies

__all__ = ["StrategyFactory", "get_strategy", "register_default_strategies"]
