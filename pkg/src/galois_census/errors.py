"""Shared exception types."""


class ResourceLimitError(RuntimeError):
    """An enumeration or transform exceeds its configured size cap."""


class BudgetExceededError(ResourceLimitError):
    """A census box is larger than the configured budget; carries an estimate."""

    def __init__(self, message: str, estimate: int):
        super().__init__(message)
        self.estimate = estimate


class UnsupportedDegreeError(ValueError):
    """Polynomial degree outside the supported classification range."""


class CheckpointMismatchError(RuntimeError):
    """Checkpoint file does not match the current run configuration."""
