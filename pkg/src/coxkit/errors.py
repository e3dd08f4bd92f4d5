"""Exception types shared across the package.

Three failure kinds are kept apart on purpose: bad input from the caller
(ValueError or a subclass), a resource cap that was exhausted before the
computation finished (ResourceLimitError, which is inconclusive rather
than a negative answer), and a violated internal invariant that should be
mathematically impossible (InvariantViolation, always a bug).
"""

from __future__ import annotations

__all__ = [
    "CoxkitError",
    "DiagramParseError",
    "FieldMismatchError",
    "InvariantViolation",
    "ResourceLimitError",
]


class CoxkitError(Exception):
    """Base class for errors raised by this package."""


class FieldMismatchError(CoxkitError, ValueError):
    """Arithmetic attempted between elements of different ground fields."""


class DiagramParseError(CoxkitError, ValueError):
    """Malformed diagram text; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class ResourceLimitError(CoxkitError):
    """A search hit its element cap or guardrail before completing.

    Catching this means "inconclusive", never "false".
    """


class InvariantViolation(CoxkitError):
    """An internal consistency check failed; indicates a logic fault."""
