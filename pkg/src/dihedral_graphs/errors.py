"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """A numeric parameter (n, p, class index) is outside its domain."""


class InvalidArgumentError(ValueError):
    """An argument is well-typed but violates an operation's precondition."""


class UnsupportedParameterError(ValueError):
    """The operation is only defined for n = p**2 with p prime."""


class DisconnectedGraphError(ValueError):
    """A distance-based quantity was requested on a disconnected graph."""


class BudgetExceededError(RuntimeError):
    """Exact search refused because the instance exceeds the configured budget."""
