"""Exception types shared across the package."""


class DigraphError(ValueError):
    """Base class for invalid digraph input or state."""


class EdgeListError(DigraphError):
    """Malformed edge-list text. Carries the 1-based line number."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class PreconditionError(DigraphError):
    """An operation was called on a digraph outside its domain."""


class SizeLimitError(DigraphError):
    """Requested instance exceeds a configured size guard."""
