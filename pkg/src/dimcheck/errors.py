"""Exception hierarchy shared by every dimcheck module."""

from __future__ import annotations

__all__ = [
    "DimcheckError",
    "UnknownBase",
    "ClassMismatch",
    "LengthMismatch",
    "NonPositiveScale",
    "UnknownSystem",
    "DuplicateSystem",
    "DimensionMismatch",
    "DivisionByZero",
    "NonIntegralRoot",
    "NegativeRadicand",
    "InvalidEvidence",
    "NotDependent",
    "NotIndependentBasis",
    "MissingValue",
    "DimMismatchWithDeclared",
    "UnknownEquation",
    "ModelError",
    "ParseError",
    "UndeclaredName",
    "DuplicateName",
]


class DimcheckError(Exception):
    """Base class for all dimcheck errors."""


class UnknownBase(DimcheckError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class ClassMismatch(DimcheckError, ValueError):
    pass


class LengthMismatch(DimcheckError, ValueError):
    pass


class NonPositiveScale(DimcheckError, ValueError):
    pass


class UnknownSystem(DimcheckError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class DuplicateSystem(DimcheckError, ValueError):
    pass


class DimensionMismatch(DimcheckError, TypeError):
    """Raised when quantities of different dimensions are added or compared.

    ``left`` and ``right`` carry the conflicting dimensions; ``span`` is an
    optional ``(line, col, end_col)`` source location set by the model checker.
    """

    def __init__(self, message, left=None, right=None, span=None):
        super().__init__(message)
        self.left = left
        self.right = right
        self.span = span


class DivisionByZero(DimcheckError, ZeroDivisionError):
    pass


class NonIntegralRoot(DimcheckError, ValueError):
    def __init__(self, message, span=None):
        super().__init__(message)
        self.span = span


class NegativeRadicand(DimcheckError, ValueError):
    pass


class InvalidEvidence(DimcheckError, ValueError):
    pass


class NotDependent(DimcheckError, ValueError):
    """The target dimension is not in the span of the basis.

    ``unreachable`` lists base-dimension symbols that would have to be added
    to the basis for the target to become expressible.
    """

    def __init__(self, message, unreachable=()):
        super().__init__(message)
        self.unreachable = tuple(unreachable)


class NotIndependentBasis(DimcheckError, ValueError):
    pass


class MissingValue(DimcheckError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class DimMismatchWithDeclared(DimcheckError, ValueError):
    pass


class UnknownEquation(DimcheckError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class ModelError(DimcheckError):
    """Error located in a model file."""

    def __init__(self, message: str, line: int = 0, col: int = 0, end_col: int | None = None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col
        self.end_col = col + 1 if end_col is None else end_col

    def __str__(self) -> str:
        return f"{self.line}:{self.col}: {self.message}"


class ParseError(ModelError):
    def __init__(self, message, line=0, col=0, end_col=None, expected=None):
        if expected:
            message = f"{message} (expected {expected})"
        super().__init__(message, line, col, end_col)
        self.expected = expected


class UndeclaredName(ModelError):
    pass


class DuplicateName(ModelError):
    pass
