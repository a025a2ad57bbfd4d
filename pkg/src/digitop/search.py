"""Budgeted search support shared by the backtracking decision procedures."""

from __future__ import annotations


class SearchBudgetExceeded(Exception):
    """Raised when a search runs out of its node budget.

    Deliberately an exception rather than a boolean so that "ran out of
    budget" can never be confused with a definite true/false answer.
    """

    def __init__(self, searched: int, context: str = ""):
        self.searched = searched
        self.context = context
        detail = f" while {context}" if context else ""
        super().__init__(f"search budget exceeded after {searched} nodes{detail}")


class Budget:
    """Mutable countdown of search nodes, shared across nested searches.

    ``None`` as a limit means unlimited.
    """

    def __init__(self, limit: int | None, context: str = ""):
        if limit is not None and limit < 0:
            raise ValueError("budget limit must be nonnegative")
        self.limit = limit
        self.used = 0
        self.context = context

    def charge(self, amount: int = 1) -> None:
        self.used += amount
        if self.limit is not None and self.used > self.limit:
            raise SearchBudgetExceeded(self.used, self.context)


def as_budget(budget: Budget | int | None, context: str = "") -> Budget:
    """Coerce an int-or-None budget argument into a shared Budget object."""
    if isinstance(budget, Budget):
        return budget
    return Budget(budget, context)
