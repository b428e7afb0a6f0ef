"""
errors.py

Exception types raised by the core modules. All of them are ValueError
subclasses so callers that only care about bad input can catch ValueError.
"""

from __future__ import annotations


class BraidSyntaxError(ValueError):
    """
    A token of a braid word or group word could not be parsed.

    Attributes:
        text: the full input string.
        position: 0-based character offset of the offending token.
    """

    def __init__(self, message: str, text: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.text = text
        self.position = position


class StrandMismatchError(ValueError):
    """Operands live on different numbers of strands."""

    def __init__(self, left: int, right: int) -> None:
        super().__init__(f"Strand counts differ: {left} vs {right}")
        self.left = left
        self.right = right


class MoveNotApplicableError(ValueError):
    """The requested rewriting move does not match at the given site."""


class NotAdmissibleError(ValueError):
    """The kept components are not invariant under the braid permutation."""
