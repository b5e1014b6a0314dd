"""Exception types shared across the package."""


class DataError(Exception):
    """Raised when input data (logs, nets, candidate specs) is malformed."""
