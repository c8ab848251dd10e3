"""Error types shared across the package.

Two failure families are kept strictly apart: a UsageError means the caller
violated a documented precondition and can fix the call; an
InternalConsistencyError means two independent routes to the same quantity
disagreed, or an exact sum failed to have the shape it provably must take.
The second kind is never recoverable by the caller and indicates a bug.
"""

from __future__ import annotations


class UsageError(ValueError):
    """A documented precondition on a public operation was violated."""


class InternalConsistencyError(RuntimeError):
    """An exact internal cross-check failed; results cannot be trusted."""
