"""
Errors Module

Every failure the library reports on purpose is an ``IdealError``. It subclasses
``ValueError`` so callers that only care about "bad input" can keep catching
``ValueError``.

The module defines:
    - IdealError: Root of the hierarchy
    - DimensionMismatchError: Operands live in ambient rings of different dimension,
      or a variable index falls outside 1..d
    - NotInIdealError: A monomial required to lie in an ideal does not
    - EmptyRegionError: A region-based view (staircase) was asked of the zero ideal
    - ExprError: Problems in the expression language, with the byte offset of the fault
    - ExprSyntaxError / ExprDimensionError: The two kinds of expression errors
"""
from typing import Optional


class IdealError(ValueError):
    """Base class for all monomial-ideal errors."""


class DimensionMismatchError(IdealError):
    """Raised when operands do not share one ambient ring A[R^d]."""


class NotInIdealError(IdealError):
    """Raised when a membership precondition fails."""


class EmptyRegionError(IdealError):
    """Raised when the zero ideal has no region to draw."""


class ExprError(IdealError):
    """
    An error in expression text.

    offset is a byte offset into the UTF-8 encoding of the source text.
    """

    def __init__(self, message: str, offset: int, text: Optional[str] = None):
        self.message = message
        self.offset = offset
        self.text = text
        super().__init__(f"{message} (at byte {offset})")

    def caret(self) -> str:
        """Two-line excerpt pointing at the error position."""
        if self.text is None:
            return ""
        raw = self.text.encode("utf-8", "surrogatepass")
        prefix = raw[: self.offset].decode("utf-8", errors="replace")
        return f"{self.text}\n{' ' * len(prefix)}^"


class ExprSyntaxError(ExprError):
    """Lexical or grammatical error, including malformed or negative rationals."""


class ExprDimensionError(ExprError, DimensionMismatchError):
    """Arity or dimension mismatch detected while parsing an expression."""
