class BudgetExceeded(RuntimeError):
    """A search would exceed its configured work budget."""


class SizeLimitExceeded(BudgetExceeded):
    """Input is larger than an exact algorithm accepts."""


class Infeasible(ValueError):
    """No solution exists (e.g. a target with no possible dominator)."""
