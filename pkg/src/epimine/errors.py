"""Exception types shared across the package."""

from __future__ import annotations


class EpiMineError(Exception):
    """Base class for all errors raised by this package."""


class EmptySetError(EpiMineError):
    """An episode contained an empty simultaneous event set."""


class DuplicateEventError(EpiMineError):
    """The same event appeared twice where events must be distinct."""


class MissingEwuError(EpiMineError):
    """An EWU-based processing order was requested without EWU values."""


class AbsentEventError(EpiMineError):
    """A utility lookup referenced an event not present at the time point."""


class UnknownTimeError(EpiMineError):
    """A utility lookup referenced a time point not in the sequence."""


class InvalidConfigError(EpiMineError):
    """A mining or generation configuration failed validation."""


class BudgetExceededError(EpiMineError):
    """The exhaustive oracle refused an input beyond its enumeration budget."""


class ParseError(EpiMineError):
    """Malformed input text.

    Carries the 1-based ``line`` and, when known, the 1-based ``column`` of
    the offending token.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)
        self.line = line
        self.column = column


class UnknownEventError(ParseError):
    """A time-point line referenced an event with no utility declaration."""


class NonIncreasingTimeError(ParseError):
    """Time points were not strictly increasing."""


class NonPositiveValueError(ParseError):
    """A quantity or unit utility was zero or negative."""


class CountMismatchError(ParseError):
    """A transaction line listed different numbers of items and utilities."""


class ChecksumWarning(UserWarning):
    """Transaction utility differs from the sum of its item utilities."""
