"""Shared error types.

Budget overruns are structured errors, never wrong answers: callers map
them to a dedicated exit code.
"""

from __future__ import annotations


class BudgetExceededError(RuntimeError):
    """A construction grew past its configured resource budget."""

    def __init__(self, what: str, limit: int):
        super().__init__(f"{what} budget exceeded (limit {limit})")
        self.what = what
        self.limit = limit


class UnsupportedError(ValueError):
    """Requested a basis or level that is reserved but not implemented."""


class RegexSyntaxError(ValueError):
    """Malformed regular expression; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
