"""Exception types shared across the package."""


class PolyjoinError(Exception):
    """Base class for all errors raised by polyjoin."""


class MalformedInputError(PolyjoinError, ValueError):
    """Input data does not describe a valid object (bad vertex index, bad file)."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}" + (f", column {column}" if column is not None else "") + f": {message}"
        super().__init__(message)


class DomainError(PolyjoinError, ValueError):
    """Operation called outside its mathematical domain."""


class ResourceLimitError(PolyjoinError):
    """Enumeration would exceed the configured vertex cap."""

    def __init__(self, required, limit, what="vertices"):
        self.required = required
        self.limit = limit
        super().__init__(
            f"{required} {what} exceeds the configured limit of {limit}; "
            f"raise the limit to at least {required} to proceed"
        )
