"""Exception hierarchy. The CLI maps each class to an exit status."""


class ZeromacError(Exception):
    """Invalid input or a failed validation (exit status 1)."""


class BudgetExceeded(ZeromacError):
    """A combinatorial search or world construction would exceed its cap (exit status 2)."""


class WorldTooLarge(BudgetExceeded):
    pass


class InternalAssertion(Exception):
    """A property that holds by construction was found violated (exit status 3)."""
