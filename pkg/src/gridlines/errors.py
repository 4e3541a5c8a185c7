"""Shared exception types."""

from __future__ import annotations


class BudgetExhausted(RuntimeError):
    """A bounded search (resampling loop, retry loop, backtracking) ran out.

    Carries enough context for the caller to decide between retrying with a
    fresh seed and reporting failure.
    """

    def __init__(self, message: str, *, stage_index: int | None = None,
                 resamples: int | None = None, block: tuple | None = None):
        super().__init__(message)
        self.stage_index = stage_index
        self.resamples = resamples
        self.block = block
