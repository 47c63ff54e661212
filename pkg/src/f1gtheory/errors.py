"""Shared exception types."""


class ResourceLimitError(ValueError):
    """An enumeration or closure exceeded its configured cap."""


class InternalCheckError(RuntimeError):
    """A structural self-check failed; indicates a bug, not bad input."""
