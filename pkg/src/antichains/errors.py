"""Exception types shared across the package."""

from __future__ import annotations


class ExplosionError(RuntimeError):
    """An enumeration exceeded its configured resource cap."""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeded the cap of {cap}")
        self.what = what
        self.cap = cap


class NotGradedError(ValueError):
    """A rank-dependent operation was applied to a non-graded poset."""


class NotRankUnimodalError(ValueError):
    """An operation requiring rank unimodality was applied to a poset without it."""


class NotAnIdealError(ValueError):
    """A subset claimed to be an order ideal is not downward closed."""


class PosetParseError(ValueError):
    """Syntax error in a poset expression; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ZeroPolynomialError(ValueError):
    """The zero polynomial was passed where a nonzero one is required."""
