"""Exception types shared across the package."""

from __future__ import annotations


class ShannonError(Exception):
    """Base class for errors raised by this package."""


class ConvergenceError(ShannonError):
    """A numerical routine failed to reach the requested tolerance.

    Carries the best error estimate achieved so callers can report it.
    """

    def __init__(self, message: str, estimate: float | None = None):
        if estimate is not None:
            message = f"{message} (achieved error estimate {estimate:.3e})"
        super().__init__(message)
        self.estimate = estimate


class BracketError(ShannonError):
    """A root bracket does not enclose a sign change."""


class InvariantViolationError(ShannonError):
    """A computed result violates a guaranteed physical bound."""
