"""Exception types shared across the package."""


class RainbowCubeError(Exception):
    """Base class for errors raised by this package."""


class UsageError(RainbowCubeError, ValueError):
    """Invalid arguments, violated preconditions, or malformed input."""


class BudgetError(RainbowCubeError, RuntimeError):
    """A search or enumeration exceeded its configured budget.

    ``best`` carries the best result found before the budget ran out and
    ``bounds`` carries certified (lower, upper) bounds when available.
    ``kind`` distinguishes a structural "class" rejection (the instance is
    outside the supported size class) from a runtime "timeout" or node
    budget.
    """

    def __init__(self, message, *, best=None, bounds=None, kind="budget"):
        super().__init__(message)
        self.best = best
        self.bounds = bounds
        self.kind = kind


class InternalError(RainbowCubeError, RuntimeError):
    """An internal consistency check failed; indicates a bug."""
