"""Exception types shared across the package."""


class SearchCancelled(RuntimeError):
    """A search was aborted by a caller-supplied cancellation signal."""


class BoundExceeded(ValueError):
    """A verification or census job was refused by a safety bound."""
