"""Exception types shared across the package."""


class BudgetExceededError(Exception):
    """A combinatorial search or sampling budget was exhausted.

    Raised instead of returning a wrong or partial answer, so callers can
    distinguish "could not decide within budget" from a definite result.
    """
