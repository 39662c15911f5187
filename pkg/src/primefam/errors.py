"""Exception types shared across the package."""


class OutOfRangeError(ValueError):
    """A query asked about numbers beyond what the prime table covers."""


class ResourceLimitError(RuntimeError):
    """An operation would need a larger prime table than allowed or available."""


class BFileParseError(ValueError):
    """A b-file's text did not follow the 'index value' line format."""

    def __init__(self, message: str, line_number: int | None = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class OeisUnavailableError(RuntimeError):
    """A reference sequence could not be obtained from cache, fixture, or network."""
