"""Exception types shared across the library."""

from __future__ import annotations


class InvalidInputError(ValueError):
    """Raised when an operation receives arguments violating its preconditions."""


class InvalidCollectionError(InvalidInputError):
    """Raised when a family of vertex sets violates the collection invariant."""


class ParseError(ValueError):
    """Raised on malformed graph or root-tuple input.

    ``line`` is the 1-based line number of the offending input line, when known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SearchBudgetExceeded(Exception):
    """Raised when a search stops because its budget ran out.

    This is deliberately an exception rather than a sentinel value: an
    inconclusive search must never be mistaken for a proven negative.
    """
