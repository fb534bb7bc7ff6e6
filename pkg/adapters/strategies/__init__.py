"""
Evaluation strategies package.

Contains one adapter per way of computing F_{k,n}.
"""
from adapters.strategies.base import BaseStrategy
from adapters.strategies.iterative import IterativeStrategy
from adapters.strategies.matrix_pow import MatrixPowStrategy
from adapters.strategies.fast_doubling import FastDoublingStrategy

__all__ = ["BaseStrategy", "IterativeStrategy", "MatrixPowStrategy", "FastDoublingStrategy"]
