"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed its configured resource cap (e.g. series term count)."""


class NonConvergenceError(RuntimeError):
    """A numerical procedure failed to converge within its error budget."""


class ConsistencyError(RuntimeError):
    """An internal cross-check between two equivalent computations failed."""
