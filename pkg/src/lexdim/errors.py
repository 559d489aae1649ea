"""Exception types raised across the package."""


class LexdimError(Exception):
    """Base class for all package errors."""


class GraphFormatError(LexdimError, ValueError):
    """Malformed graph6 text, graph spec, or family file."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)


class DomainError(LexdimError, ValueError):
    """An operation was applied outside its domain (e.g. radius of a disconnected graph)."""


class CapExceededError(LexdimError, ValueError):
    """Input size exceeds a configured search or construction cap."""

    def __init__(self, what: str, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
