"""
Error types raised by the kfib library.

Every error derives from KFibError so callers (the CLI in particular) can
map the whole family to a single exit status.
"""


class KFibError(Exception):
    """Base class for all kfib failures."""


class InexactDivision(KFibError):
    """A divisibility-checked division left a remainder."""

    def __init__(self, num: int, den: int):
        self.num = num
        self.den = den
        super().__init__(f"InexactDivision: {num} is not divisible by {den}")


class NotInvertibleExactly(KFibError):
    """The inverse of a matrix has no power-of-two scaled representation."""


class RelationViolated(KFibError):
    """A matrix does not satisfy T^2 = trace*T - det*I."""


class NotUnimodular(KFibError):
    """A conjugating matrix does not have determinant +1 or -1."""


class IndexTooLarge(KFibError):
    """An index lies outside the window a floating-point check supports."""


class StrategyMismatch(KFibError):
    """Two evaluation strategies disagreed, or a strategy broke its own bound."""
