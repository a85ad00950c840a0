"""Exceptions shared across the package."""


class GuardError(ValueError):
    """A closed-form formula was evaluated outside its domain guard."""


class MinPartError(ValueError):
    """A constraint-class probability was requested for a class whose
    smallest cycle is too short for the closed form.  The exact value can
    still be obtained by brute force (see permstats.oracle)."""


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed the configured element budget."""

    def __init__(self, size: int, budget: int, message: str = ""):
        self.size = size
        self.budget = budget
        super().__init__(
            message
            or f"enumeration of {size} elements exceeds budget {budget}; "
            "raise PERMSTATS_ENUM_BUDGET or use a monte-carlo estimate"
        )


class InfeasibleNodeError(RuntimeError):
    """A moment-polynomial interpolation node is too large to enumerate."""

    def __init__(self, node: int, largest_feasible: int):
        self.node = node
        self.largest_feasible = largest_feasible
        super().__init__(
            f"full-cycle enumeration at n={node} exceeds the budget; "
            f"largest feasible node is n={largest_feasible}"
        )
