"""Exceptions shared across modules."""


class InvariantViolation(RuntimeError):
    """A mathematical claim the library relies on failed for a concrete input.

    ``details`` carries a JSON-serializable reproduction bundle.
    """

    def __init__(self, message: str, details: dict | None = None):
        super().__init__(message)
        self.details = details or {}


class OrderGatingError(ValueError):
    """Diagonal order requested for a permutation that is not vexillary."""


class LimitsExceeded(RuntimeError):
    """A configured size bound would be exceeded."""
