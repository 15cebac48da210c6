"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class Exact3Error(Exception):
    """Base class for every error raised by this package."""


class ArgumentError(Exact3Error, ValueError):
    """An argument refers to something that does not exist or is malformed."""


class DomainError(Exact3Error, ValueError):
    """The input is well formed but violates an operation's precondition."""


class DisconnectedGraphError(DomainError):
    """Raised when a connected graph is required.

    Attributes:
        u, v: two vertices with no path between them.
    """

    def __init__(self, u: int, v: int):
        super().__init__(f"graph is disconnected: no path between {u} and {v}")
        self.u = u
        self.v = v


class NotExactError(DomainError):
    """The graph is not exactly k-edge-connected; carries the offending pair."""

    def __init__(self, k: int, u: int, v: int, value: int):
        super().__init__(
            f"not exactly {k}-edge-connected: lambda({u},{v}) = {value}"
        )
        self.k = k
        self.witness = (u, v, value)


class FormatError(Exact3Error, ValueError):
    """Text input (graph, script or embedding) could not be parsed or replayed."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InvariantViolation(Exact3Error, AssertionError):
    """A guaranteed property failed to hold. Always indicates a bug."""


class BudgetExceeded(Exact3Error):
    """Enumeration ran out of its resource budget.

    Attributes:
        partial: counts for the orders that were completed before stopping.
    """

    def __init__(self, message: str, partial):
        super().__init__(message)
        self.partial = partial
