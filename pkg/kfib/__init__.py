"""
kfib - exact k-Fibonacci / k-Lucas arithmetic at arithmetic indexes.

Modules:
    exact         exact integers and 2x2 matrices with power-of-two scale
    sequences     F_{k,n}, L_{k,n}, fast doubling, Delta_a, epsilon_a(n)
    closed_forms  R_a / S_a constructors and their closed-form powers
    identities    residual evaluators and the grid verifier
    sums          closed-form, naive and matrix-route sums of F_{k,ai}
"""

from kfib.exact import Mat2, OpCounter, Params, checked_div
from kfib.errors import (
    IndexTooLarge,
    InexactDivision,
    KFibError,
    NotInvertibleExactly,
    NotUnimodular,
    RelationViolated,
    StrategyMismatch,
)

__all__ = [
    "Mat2",
    "OpCounter",
    "Params",
    "checked_div",
    "KFibError",
    "InexactDivision",
    "NotInvertibleExactly",
    "RelationViolated",
    "NotUnimodular",
    "IndexTooLarge",
    "StrategyMismatch",
]
